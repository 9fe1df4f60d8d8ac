#include "metric_lines/dh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

using Word = std::uint64_t;

/// Adjacency bit rows for the elimination; rows of deleted vertices are
/// cleared and deleted vertices are removed from every row.
class ResidualGraph {
 public:
  explicit ResidualGraph(const Graph& g)
      : n_(g.order()), words_((static_cast<std::size_t>(n_) + 63) / 64),
        rows_(static_cast<std::size_t>(n_) * words_, 0), degree_(static_cast<std::size_t>(n_)),
        alive_(static_cast<std::size_t>(n_), true), remaining_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) set(v, w);
      degree_[static_cast<std::size_t>(v)] = g.degree(v);
    }
  }

  int remaining() const { return remaining_; }
  bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex v, Vertex w) const { return (row(v)[w / 64] >> (w % 64)) & 1U; }

  Vertex first_neighbor(Vertex v) const {
    for (std::size_t i = 0; i < words_; ++i) {
      if (row(v)[i] != 0) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(row(v)[i])));
    }
    return -1;
  }

  /// N(v) - {w} == N(w) - {v}
  bool twins(Vertex v, Vertex w) const {
    const Word* a = row(v);
    const Word* b = row(w);
    for (std::size_t i = 0; i < words_; ++i) {
      Word x = a[i];
      Word y = b[i];
      if (static_cast<std::size_t>(w / 64) == i) x &= ~(Word{1} << (w % 64));
      if (static_cast<std::size_t>(v / 64) == i) y &= ~(Word{1} << (v % 64));
      if (x != y) return false;
    }
    return true;
  }

  void remove(Vertex v) {
    for (Vertex w = 0; w < n_; ++w) {
      if (adjacent(v, w)) {
        clear(w, v);
        --degree_[static_cast<std::size_t>(w)];
      }
    }
    std::fill_n(rows_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * words_),
                static_cast<std::ptrdiff_t>(words_), 0);
    alive_[static_cast<std::size_t>(v)] = false;
    --remaining_;
  }

 private:
  const Word* row(Vertex v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  void set(Vertex v, Vertex w) { rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(w / 64)] |= Word{1} << (w % 64); }
  void clear(Vertex v, Vertex w) { rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(w / 64)] &= ~(Word{1} << (w % 64)); }

  int n_;
  std::size_t words_;
  std::vector<Word> rows_;
  std::vector<int> degree_;
  std::vector<bool> alive_;
  int remaining_;
};

struct Elimination {
  Vertex vertex;
  StepKind kind;
  Vertex anchor;
};

/// Pendant first, then a false twin, then a true twin; lowest-index partner.
std::optional<Elimination> eliminable(const ResidualGraph& r, Vertex v, int n) {
  if (r.degree(v) == 1) return Elimination{v, StepKind::Pendant, r.first_neighbor(v)};
  for (const auto kind : {StepKind::FalseTwin, StepKind::TrueTwin}) {
    const bool want_edge = kind == StepKind::TrueTwin;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || !r.alive(w) || r.degree(w) != r.degree(v)) continue;
      if (r.adjacent(v, w) == want_edge && r.twins(v, w)) return Elimination{v, kind, w};
    }
  }
  return std::nullopt;
}

}  // namespace

Graph build_from_sequence(const ConstructionSequence& seq) {
  const int n = seq.order();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& step = seq.steps[i];
    const auto expected = static_cast<Vertex>(i + 1);
    if (step.new_vertex != expected) {
      throw InputError("step " + std::to_string(i + 1) + " adds vertex " + std::to_string(step.new_vertex) +
                       ", expected " + std::to_string(expected));
    }
    if (step.anchor < 0 || step.anchor >= step.new_vertex) {
      throw InputError("step " + std::to_string(i + 1) + " anchors on " + std::to_string(step.anchor) +
                       ", which is not an earlier vertex");
    }
    auto& mine = adj[static_cast<std::size_t>(step.new_vertex)];
    const auto& theirs = adj[static_cast<std::size_t>(step.anchor)];
    switch (step.kind) {
      case StepKind::Pendant:
        mine = {step.anchor};
        break;
      case StepKind::FalseTwin:
        if (theirs.empty()) {
          throw InputError("step " + std::to_string(i + 1) + " adds a false twin of an isolated vertex");
        }
        mine = theirs;
        break;
      case StepKind::TrueTwin:
        mine = theirs;
        mine.push_back(step.anchor);
        break;
    }
    for (Vertex w : mine) adj[static_cast<std::size_t>(w)].push_back(step.new_vertex);
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

PruningResult recognize_pruning(const Graph& g) {
  if (!is_connected(g)) throw InputError("distance-hereditary recognition needs a connected graph");
  const int n = g.order();
  ResidualGraph residual(g);
  std::vector<Elimination> removed;
  removed.reserve(static_cast<std::size_t>(n));

  while (residual.remaining() > 1) {
    std::optional<Elimination> next;
    for (Vertex v = 0; v < n && !next; ++v) {
      if (residual.alive(v)) next = eliminable(residual, v, n);
    }
    if (!next) {
      NotDistanceHereditary stuck{{}, Graph(1)};
      for (Vertex v = 0; v < n; ++v) {
        if (residual.alive(v)) stuck.residual.push_back(v);
      }
      stuck.residual_graph = induced_subgraph(g, stuck.residual).graph;
      return {std::nullopt, std::move(stuck)};
    }
    residual.remove(next->vertex);
    removed.push_back(*next);
  }

  // Replay the deletions backwards: the survivor becomes vertex 0 and the
  // k-th deletion from the end becomes vertex k.
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  DhCertificate cert;
  cert.labels.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (residual.alive(v)) {
      label[static_cast<std::size_t>(v)] = 0;
      cert.labels.push_back(v);
    }
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const auto id = static_cast<Vertex>(cert.labels.size());
    label[static_cast<std::size_t>(it->vertex)] = id;
    cert.labels.push_back(it->vertex);
    cert.sequence.steps.push_back({it->kind, id, label[static_cast<std::size_t>(it->anchor)]});
  }
  return {std::move(cert), std::nullopt};
}

bool is_distance_hereditary(const Graph& g) { return recognize_pruning(g).accepted(); }

BruteforceResult recognize_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kMaxBruteforceOrder) {
    throw InputError("brute-force recognition is limited to n <= " + std::to_string(kMaxBruteforceOrder));
  }
  if (!is_connected(g)) throw InputError("distance-hereditary recognition needs a connected graph");

  using Mask = std::uint32_t;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> dist_g;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
    dist_g.push_back(distances_from(g, v));
  }
  auto expand = [&](Mask frontier, Mask allowed) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    return next & allowed;
  };

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask s = 1; s != 0 && s <= full; ++s) {
    if (std::popcount(s) < 3) continue;
    for (Mask xs = s; xs != 0; xs &= xs - 1) {
      const Vertex x = std::countr_zero(xs);
      Mask visited = Mask{1} << x;
      Mask frontier = visited;
      int depth = 0;
      while (frontier != 0) {
        for (Mask f = frontier; f != 0; f &= f - 1) {
          const Vertex y = std::countr_zero(f);
          const int dg = dist_g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          if (dg != depth) {
            BruteforceResult out{false, DistanceWitness{{}, x, y, depth, dg}};
            for (Mask t = s; t != 0; t &= t - 1) out.witness->subset.push_back(std::countr_zero(t));
            return out;
          }
        }
        frontier = expand(frontier, s) & ~visited;
        visited |= frontier;
        ++depth;
      }
      // G[S] is disconnected. Its components are smaller masks, already
      // checked, so nothing above could have fired for this S.
      if (visited != s) break;
    }
  }
  return {};
}

ConstructionSequence random_dh_sequence(int n, std::uint64_t seed, StepWeights weights) {
  if (n < 1) throw InputError("random_dh needs n >= 1");
  const double w[] = {weights.pendant, weights.false_twin, weights.true_twin};
  for (double x : w) {
    if (!std::isfinite(x) || x < 0) throw InputError("step weights must be finite and non-negative");
  }
  if (w[0] + w[1] + w[2] <= 0) throw InputError("step weights must not all be zero");

  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> pick_kind({w[0], w[1], w[2]});
  constexpr StepKind kinds[] = {StepKind::Pendant, StepKind::FalseTwin, StepKind::TrueTwin};
  ConstructionSequence seq;
  for (Vertex v = 1; v < n; ++v) {
    StepKind kind = kinds[pick_kind(rng)];
    const Vertex anchor = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    if (v == 1 && kind == StepKind::FalseTwin) kind = StepKind::Pendant;
    seq.steps.push_back({kind, v, anchor});
  }
  return seq;
}

Graph random_dh(int n, std::uint64_t seed, StepWeights weights) {
  return build_from_sequence(random_dh_sequence(n, seed, weights));
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.size() < 2) throw InputError("a complete multipartite graph needs at least two parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw InputError("every part needs at least one vertex");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  const auto n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace metric_lines
