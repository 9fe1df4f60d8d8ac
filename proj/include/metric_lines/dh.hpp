#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines {

enum class StepKind { Pendant, TrueTwin, FalseTwin };

/// Adds `new_vertex` as a pendant of `anchor`, or as a true/false twin of it.
struct ConstructionStep {
  StepKind kind;
  Vertex new_vertex;
  Vertex anchor;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

/// Pendant/twin additions starting from the single vertex 0. Step i adds
/// vertex i + 1.
struct ConstructionSequence {
  std::vector<ConstructionStep> steps;

  int order() const { return static_cast<int>(steps.size()) + 1; }
  friend bool operator==(const ConstructionSequence&, const ConstructionSequence&) = default;
};

/// Replays a sequence. Throws InputError when steps are out of order, an
/// anchor is not an earlier vertex, or a false twin of an isolated vertex
/// would disconnect the graph.
Graph build_from_sequence(const ConstructionSequence& seq);

/// Membership certificate: replaying `sequence` gives a copy of the input
/// graph in which sequence vertex i is original vertex labels[i].
struct DhCertificate {
  ConstructionSequence sequence;
  std::vector<Vertex> labels;
};

/// Elimination got stuck: the residual has no pendant vertex and no twins.
struct NotDistanceHereditary {
  VertexSet residual;  // original labels
  Graph residual_graph;
};

struct PruningResult {
  std::optional<DhCertificate> certificate;
  std::optional<NotDistanceHereditary> witness;

  bool accepted() const { return certificate.has_value(); }
};

/// Recognition by repeated deletion of a pendant vertex or of one vertex of
/// a twin pair. Vertices are scanned in increasing index; at each vertex a
/// pendant deletion is preferred over a false-twin, then a true-twin
/// deletion, and the twin partner is the lowest-index one. Throws
/// InputError for disconnected input.
PruningResult recognize_pruning(const Graph& g);

bool is_distance_hereditary(const Graph& g);

inline constexpr int kMaxBruteforceOrder = 16;

struct DistanceWitness {
  VertexSet subset;
  Vertex x;
  Vertex y;
  int induced_distance;
  int graph_distance;
};

struct BruteforceResult {
  bool distance_hereditary = true;
  std::optional<DistanceWitness> witness;
};

/// Checks d_H = d_G for every connected induced subgraph H, subsets in
/// increasing bitmask order. Exponential; n <= kMaxBruteforceOrder.
BruteforceResult recognize_bruteforce(const Graph& g);

/// Relative weights of the three step kinds.
struct StepWeights {
  double pendant = 1.0;
  double false_twin = 1.0;
  double true_twin = 1.0;

  friend bool operator==(const StepWeights&, const StepWeights&) = default;
};

/// n - 1 random steps; kinds drawn by weight, anchors uniform over the
/// vertices already present. The first step cannot be a false twin (the
/// anchor is isolated), so a false twin drawn there becomes a pendant.
ConstructionSequence random_dh_sequence(int n, std::uint64_t seed, StepWeights weights = {});

Graph random_dh(int n, std::uint64_t seed, StepWeights weights = {});

/// Parts are consecutive index blocks; edges join every pair of vertices in
/// different parts. Needs at least two parts, each nonempty.
Graph complete_multipartite(std::span<const int> part_sizes);

inline constexpr int kMaxCycleEnumerationOrder = 12;

struct Dh1Result {
  bool holds = true;
  std::vector<Vertex> violating_cycle;  // cyclic order, empty when holds
};

/// Every cycle of length >= 5 has two chords whose endpoints interleave
/// around the cycle. n <= kMaxCycleEnumerationOrder.
Dh1Result verify_dh1_crossing_chords(const Graph& g);

struct Dh2Witness {
  Vertex source;
  Vertex u;
  Vertex v;
};

struct Dh2Result {
  bool holds = true;
  std::optional<Dh2Witness> witness;
};

/// For every source x and every edge uv inside one BFS level S_i(x), u and v
/// have the same neighbours in S_{i-1}(x).
Dh2Result verify_dh2_level_neighborhoods(const Graph& g);

/// Lexicographically first pair of vertex-disjoint twin pairs.
std::optional<std::pair<TwinPair, TwinPair>> find_disjoint_twin_pairs(const Graph& g);

}  // namespace metric_lines
