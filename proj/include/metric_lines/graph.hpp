#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace metric_lines {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates

class FiniteMetric;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once constructed.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(int n = 1);

  /// Throws InputError on out-of-range endpoints or self-loops. Duplicate
  /// edges (in either orientation) are collapsed.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// S_i(x) for every i, plus the vertices unreachable from x.
struct BfsLevels {
  Vertex source = 0;
  std::vector<VertexSet> levels;
  VertexSet unreachable;

  int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

BfsLevels bfs_levels(const Graph& g, Vertex x);

/// Hop distance from x to every vertex; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex x);

/// Shortest-path metric of a connected graph. Throws DisconnectedError when
/// g is disconnected and InputError when g has a single vertex.
FiniteMetric all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
VertexSet cut_vertices(const Graph& g);

/// Connected with no cut vertex. Throws InputError for n < 3.
bool is_two_connected(const Graph& g);

enum class TwinKind { True, False };

struct TwinPair {
  Vertex u;  // u < v
  Vertex v;
  TwinKind kind;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Every unordered pair {u, v} with N(u) - {v} = N(v) - {u}, sorted by (u, v).
std::vector<TwinPair> find_twins(const Graph& g);

bool are_twins(const Graph& g, Vertex u, Vertex v);

/// True iff some vertex is adjacent to both u and v. Throws InputError when
/// uv is not an edge.
bool edge_in_triangle(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;  // new index -> original vertex
  std::vector<Vertex> old_to_new;  // original vertex -> new index, or -1
};

/// G[S]. Vertices of S keep their relative order. Throws InputError when S
/// is empty or out of range.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace metric_lines
