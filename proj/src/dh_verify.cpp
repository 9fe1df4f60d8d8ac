#include <algorithm>
#include <bit>
#include <string>

#include "metric_lines/dh.hpp"
#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

using Mask = std::uint32_t;

/// DFS over simple cycles whose smallest vertex is `start`; each cycle is
/// reported once (second vertex smaller than the last).
class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << w;
    }
  }

  /// First cycle of length >= 5 without two crossing chords, if any.
  std::vector<Vertex> find_violation() {
    for (Vertex start = 0; start < n_; ++start) {
      start_ = start;
      path_ = {start};
      if (extend(Mask{1} << start)) return path_;
    }
    return {};
  }

 private:
  bool extend(Mask on_path) {
    const Vertex u = path_.back();
    const Mask adj_u = adj_[static_cast<std::size_t>(u)];
    if (path_.size() >= 5 && ((adj_u >> start_) & 1U) && path_[1] < u && !has_crossing_chords()) return true;
    for (Mask next = adj_u & ~on_path; next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      if (w < start_) continue;
      path_.push_back(w);
      if (extend(on_path | (Mask{1} << w))) return true;
      path_.pop_back();
    }
    return false;
  }

  bool has_crossing_chords() const {
    const auto k = static_cast<int>(path_.size());
    chords_.clear();
    for (int i = 0; i < k; ++i) {
      const Mask adj_i = adj_[static_cast<std::size_t>(path_[static_cast<std::size_t>(i)])];
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if ((adj_i >> path_[static_cast<std::size_t>(j)]) & 1U) chords_.emplace_back(i, j);
      }
    }
    for (std::size_t a = 0; a < chords_.size(); ++a) {
      for (std::size_t b = a + 1; b < chords_.size(); ++b) {
        const auto [p, q] = chords_[a];
        const auto [r, s] = chords_[b];
        if ((p < r && r < q && q < s) || (r < p && p < s && s < q)) return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  mutable std::vector<std::pair<int, int>> chords_;
};

}  // namespace

Dh1Result verify_dh1_crossing_chords(const Graph& g) {
  if (g.order() > kMaxCycleEnumerationOrder) {
    throw InputError("cycle enumeration is limited to n <= " + std::to_string(kMaxCycleEnumerationOrder));
  }
  Dh1Result out;
  out.violating_cycle = CycleSearch(g).find_violation();
  out.holds = out.violating_cycle.empty();
  return out;
}

Dh2Result verify_dh2_level_neighborhoods(const Graph& g) {
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    const auto dist = distances_from(g, x);
    auto level = [&](Vertex v) { return dist[static_cast<std::size_t>(v)]; };
    for (Vertex u = 0; u < n; ++u) {
      if (level(u) < 1) continue;
      for (Vertex v : g.neighbors(u)) {
        if (v <= u || level(v) != level(u)) continue;
        VertexSet nu, nv;
        for (Vertex w : g.neighbors(u)) {
          if (level(w) == level(u) - 1) nu.push_back(w);
        }
        for (Vertex w : g.neighbors(v)) {
          if (level(w) == level(u) - 1) nv.push_back(w);
        }
        if (nu != nv) return {false, Dh2Witness{x, u, v}};
      }
    }
  }
  return {};
}

std::optional<std::pair<TwinPair, TwinPair>> find_disjoint_twin_pairs(const Graph& g) {
  const auto twins = find_twins(g);
  for (std::size_t a = 0; a < twins.size(); ++a) {
    for (std::size_t b = a + 1; b < twins.size(); ++b) {
      const auto& p = twins[a];
      const auto& q = twins[b];
      if (p.u != q.u && p.u != q.v && p.v != q.u && p.v != q.v) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace metric_lines
