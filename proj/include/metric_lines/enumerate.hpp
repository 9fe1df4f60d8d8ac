#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines {

/// Labeled exhaustive enumeration is limited to 2^21 edge subsets.
inline constexpr int kMaxEnumerationOrder = 7;

/// Edge masks and canonical codes fit in 64 bits up to this order.
inline constexpr int kMaxMaskOrder = 11;

inline constexpr int kMaxClassOrder = 8;

/// Pair (i, j), i < j, owns bit j(j-1)/2 + i: the graph6 column order.
constexpr int edge_bit(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

/// Connectivity straight from the mask, without building a Graph.
bool mask_connected(int n, std::uint64_t mask);

/// Minimum edge bit string (compared from bit 0 upwards) over the
/// relabelings that order vertices by colour-refinement class. Two graphs
/// get equal codes iff they are isomorphic, and the code is itself the edge
/// mask of one labeled graph in the class.
std::uint64_t canonical_code(const Graph& g);

inline bool is_canonical(const Graph& g) { return canonical_code(g) == edge_mask(g); }

using GraphVisitor = std::function<void(const Graph&, std::uint64_t mask)>;

/// Calls `visit` for every connected labeled graph on n vertices, in
/// increasing edge-mask order; with `canonical` only the representative of
/// each isomorphism class is visited. 2 <= n <= kMaxEnumerationOrder.
void enumerate_connected_graphs(int n, bool canonical, const GraphVisitor& visit);

/// One graph per isomorphism class on n vertices, grown by vertex
/// augmentation and canonical deduplication. 1 <= n <= kMaxClassOrder,
/// sorted by canonical code.
std::vector<Graph> isomorphism_class_representatives(int n, bool connected_only);

}  // namespace metric_lines
