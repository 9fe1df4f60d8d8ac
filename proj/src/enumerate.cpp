#include "metric_lines/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

using Row = std::uint16_t;
using Rows = std::array<Row, kMaxMaskOrder>;

void require_mask_order(int n) {
  if (n < 1 || n > kMaxMaskOrder) {
    throw InputError("edge masks are limited to 1 <= n <= " + std::to_string(kMaxMaskOrder));
  }
}

Rows rows_from_mask(int n, std::uint64_t mask) {
  Rows rows{};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> edge_bit(i, j)) & 1U) {
        rows[static_cast<std::size_t>(i)] |= Row(1U << j);
        rows[static_cast<std::size_t>(j)] |= Row(1U << i);
      }
    }
  }
  return rows;
}

bool rows_connected(int n, const Rows& rows) {
  Row seen = 1;
  Row frontier = 1;
  while (frontier != 0) {
    Row next = 0;
    for (unsigned f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = static_cast<Row>(next & ~seen);
    seen |= next;
  }
  return std::popcount(static_cast<unsigned>(seen)) == n;
}

/// Colour refinement with colours named by the rank of their signature, so
/// the final colouring is an isomorphism invariant.
std::array<int, kMaxMaskOrder> refine_colors(int n, const Rows& rows) {
  std::array<int, kMaxMaskOrder> color{};
  int classes = 1;
  while (true) {
    using Signature = std::array<int, kMaxMaskOrder + 1>;
    std::array<Signature, kMaxMaskOrder> sig{};
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s[0] = color[static_cast<std::size_t>(v)];
      for (unsigned r = rows[static_cast<std::size_t>(v)]; r != 0; r &= r - 1) {
        ++s[1 + static_cast<std::size_t>(color[static_cast<std::size_t>(std::countr_zero(r))])];
      }
    }
    std::array<Signature, kMaxMaskOrder> sorted = sig;
    std::sort(sorted.begin(), sorted.begin() + n);
    const auto distinct = static_cast<int>(std::unique(sorted.begin(), sorted.begin() + n) - sorted.begin());
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(sorted.begin(), sorted.begin() + distinct, sig[static_cast<std::size_t>(v)]) -
                           sorted.begin());
    }
    if (distinct == classes) return color;
    classes = distinct;
  }
}

/// Branch and bound over colour-respecting placements. The order compares
/// bit strings from bit 0 upwards, so a placement of positions 0..p fixes a
/// prefix of the string and can be pruned against the best one.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, const Rows& rows) : n_(n), rows_(rows) {
    const auto color = refine_colors(n, rows);
    std::array<int, kMaxMaskOrder> order{};
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
      return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
    });
    for (int p = 0; p < n; ++p) {
      slot_color_[static_cast<std::size_t>(p)] = color[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
    }
    color_ = color;
  }

  std::uint64_t run() {
    place(0, 0, 0);
    return best_;
  }

 private:
  // a < b in bit-0-first lexicographic order, restricted to `prefix` bits
  static int compare(std::uint64_t a, std::uint64_t b, std::uint64_t prefix) {
    const std::uint64_t diff = (a ^ b) & prefix;
    if (diff == 0) return 0;
    return ((a >> std::countr_zero(diff)) & 1U) ? 1 : -1;
  }

  void place(int p, std::uint64_t mask, unsigned used) {
    if (p == n_) {
      if (!have_best_ || compare(mask, best_, ~std::uint64_t{0}) < 0) {
        best_ = mask;
        have_best_ = true;
      }
      return;
    }
    const int fixed_bits = (p + 1) * p / 2;
    const std::uint64_t prefix = fixed_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << fixed_bits) - 1;
    for (int v = 0; v < n_; ++v) {
      if (((used >> v) & 1U) || color_[static_cast<std::size_t>(v)] != slot_color_[static_cast<std::size_t>(p)]) continue;
      std::uint64_t next = mask;
      for (int i = 0; i < p; ++i) {
        if ((rows_[static_cast<std::size_t>(v)] >> at_[static_cast<std::size_t>(i)]) & 1U) {
          next |= std::uint64_t{1} << edge_bit(i, p);
        }
      }
      if (have_best_ && compare(next, best_, prefix) > 0) continue;
      at_[static_cast<std::size_t>(p)] = v;
      place(p + 1, next, used | (1U << v));
    }
  }

  int n_;
  Rows rows_;
  std::array<int, kMaxMaskOrder> color_{};
  std::array<int, kMaxMaskOrder> slot_color_{};
  std::array<int, kMaxMaskOrder> at_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

Rows rows_of(const Graph& g) {
  Rows rows{};
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) rows[static_cast<std::size_t>(v)] |= Row(1U << w);
  }
  return rows;
}

Graph graph_from_rows(int n, const Rows& rows) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (unsigned r = rows[static_cast<std::size_t>(u)] >> (u + 1); r != 0; r &= r - 1) {
      edges.emplace_back(u, u + 1 + std::countr_zero(r));
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  require_mask_order(n);
  const int pairs = pair_count(n);
  if (pairs < 64 && (mask >> pairs) != 0) throw InputError("edge mask has bits beyond the last vertex pair");
  return graph_from_rows(n, rows_from_mask(n, mask));
}

std::uint64_t edge_mask(const Graph& g) {
  require_mask_order(g.order());
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_bit(u, v);
  return mask;
}

bool mask_connected(int n, std::uint64_t mask) {
  require_mask_order(n);
  return rows_connected(n, rows_from_mask(n, mask));
}

std::uint64_t canonical_code(const Graph& g) {
  require_mask_order(g.order());
  return CanonicalSearch(g.order(), rows_of(g)).run();
}

void enumerate_connected_graphs(int n, bool canonical, const GraphVisitor& visit) {
  if (n < 2 || n > kMaxEnumerationOrder) {
    throw InputError("labeled enumeration needs 2 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Rows rows = rows_from_mask(n, mask);
    if (!rows_connected(n, rows)) continue;
    if (canonical && CanonicalSearch(n, rows).run() != mask) continue;
    visit(graph_from_rows(n, rows), mask);
  }
}

std::vector<Graph> isomorphism_class_representatives(int n, bool connected_only) {
  if (n < 1 || n > kMaxClassOrder) {
    throw InputError("isomorphism classes are generated for 1 <= n <= " + std::to_string(kMaxClassOrder));
  }
  std::set<std::uint64_t> codes{0};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t parent : codes) {
      const Rows base = rows_from_mask(k - 1, parent);
      for (unsigned nbrs = 0; nbrs < (1U << (k - 1)); ++nbrs) {
        Rows rows = base;
        rows[static_cast<std::size_t>(k - 1)] = static_cast<Row>(nbrs);
        for (unsigned r = nbrs; r != 0; r &= r - 1) {
          rows[static_cast<std::size_t>(std::countr_zero(r))] |= Row(1U << (k - 1));
        }
        next.insert(CanonicalSearch(k, rows).run());
      }
    }
    codes = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes) {
    const Rows rows = rows_from_mask(n, code);
    if (!connected_only || rows_connected(n, rows)) out.push_back(graph_from_rows(n, rows));
  }
  return out;
}

}  // namespace metric_lines
