#include "metric_lines/lines.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include <omp.h>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

using Word = std::uint64_t;

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void require_point(const FiniteMetric& m, Vertex p) {
  if (p < 0 || p >= m.size()) {
    throw InputError("point " + std::to_string(p) + " out of range [0, " + std::to_string(m.size()) + ")");
  }
}

void require_distinct(const FiniteMetric& m, Vertex x, Vertex y) {
  require_point(m, x);
  require_point(m, y);
  if (x == y) throw InputError("points must be distinct, got " + std::to_string(x) + " twice");
}

/// Membership bitset of line(u,v).
void line_words(const FiniteMetric& m, Vertex u, Vertex v, Word* out) {
  const auto ru = m.row(u);
  const auto rv = m.row(v);
  const Distance duv = ru[static_cast<std::size_t>(v)];
  const int n = m.size();
  for (int p = 0; p < n; ++p) {
    const Distance dpu = ru[static_cast<std::size_t>(p)];
    const Distance dpv = rv[static_cast<std::size_t>(p)];
    // p = u or p = v satisfies one of the equations with a zero distance.
    const bool on = dpu + duv == dpv || dpu + dpv == duv || duv + dpv == dpu;
    if (on) out[p / 64] |= Word{1} << (p % 64);
  }
}

VertexSet members_of(const Word* words, int n) {
  VertexSet out;
  for (int p = 0; p < n; ++p) {
    if ((words[p / 64] >> (p % 64)) & 1U) out.push_back(p);
  }
  return out;
}

/// Deduplicates the per-pair bitsets; line ids follow the first generating
/// pair in rank order.
LineSet assemble(int n, const std::vector<Word>& flat) {
  const std::size_t w = words_for(n);
  const std::size_t pairs = flat.size() / w;
  auto block_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a * w),
                                        flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * w),
                                        flat.begin() + static_cast<std::ptrdiff_t>(b * w),
                                        flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * w));
  };
  std::vector<std::size_t> order(pairs);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), block_less);

  // representative[r] = smallest pair rank with the same member set as r
  std::vector<std::size_t> representative(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const bool new_group = i == 0 || block_less(order[i - 1], order[i]);
    representative[order[i]] = new_group ? order[i] : representative[order[i - 1]];
  }
  std::vector<std::size_t> id_of_rep(pairs, pairs);
  std::vector<VertexSet> lines;
  std::vector<std::size_t> index(pairs);
  for (std::size_t r = 0; r < pairs; ++r) {
    const std::size_t rep = representative[r];
    if (id_of_rep[rep] == pairs) {
      id_of_rep[rep] = lines.size();
      lines.push_back(members_of(flat.data() + rep * w, n));
    }
    index[r] = id_of_rep[rep];
  }
  return LineSet(n, std::move(lines), std::move(index));
}

}  // namespace

bool between(const FiniteMetric& m, Vertex a, Vertex b, Vertex c) {
  require_distinct(m, a, b);
  require_distinct(m, b, c);
  require_distinct(m, a, c);
  return m(a, b) + m(b, c) == m(a, c);
}

Line line_of(const FiniteMetric& m, Vertex u, Vertex v) {
  require_distinct(m, u, v);
  std::vector<Word> words(words_for(m.size()), 0);
  line_words(m, u, v, words.data());
  return {{std::min(u, v), std::max(u, v)}, members_of(words.data(), m.size())};
}

VertexSet ext_set(const FiniteMetric& m, Vertex x, Vertex y) {
  require_distinct(m, x, y);
  VertexSet out;
  for (Vertex z = 0; z < m.size(); ++z) {
    if (z != x && z != y && m(x, y) + m(y, z) == m(x, z)) out.push_back(z);
  }
  return out;
}

VertexSet interval_open(const FiniteMetric& m, Vertex x, Vertex y) {
  require_distinct(m, x, y);
  VertexSet out;
  for (Vertex z = 0; z < m.size(); ++z) {
    if (z != x && z != y && m(x, z) + m(z, y) == m(x, y)) out.push_back(z);
  }
  return out;
}

VertexSet interval_half(const FiniteMetric& m, Vertex x, Vertex y) {
  auto out = interval_open(m, x, y);
  out.insert(std::lower_bound(out.begin(), out.end(), x), x);
  return out;
}

VertexSet interval_closed(const FiniteMetric& m, Vertex x, Vertex y) {
  auto out = interval_half(m, x, y);
  out.insert(std::lower_bound(out.begin(), out.end(), y), y);
  return out;
}

bool is_universal(const FiniteMetric& m, const Line& line) {
  return static_cast<int>(line.members.size()) == m.size();
}

std::size_t pair_rank(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const auto nu = static_cast<std::size_t>(n);
  const auto uu = static_cast<std::size_t>(u);
  return uu * nu - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

LineSet::LineSet(int n, std::vector<VertexSet> lines, std::vector<std::size_t> generator_index)
    : n_(n), lines_(std::move(lines)), generator_index_(std::move(generator_index)) {
  if (n < 2) throw InputError("a line set needs at least two points");
  if (generator_index_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    throw InputError("generator index must cover every pair of points");
  }
  for (std::size_t id : generator_index_) {
    if (id >= lines_.size()) throw InputError("generator index refers to a missing line");
  }
  universal_ = std::any_of(lines_.begin(), lines_.end(),
                           [n](const VertexSet& l) { return static_cast<int>(l.size()) == n; });
}

std::size_t LineSet::line_index(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("not a pair of distinct points");
  return generator_index_[pair_rank(n_, u, v)];
}

LineSet all_lines(const FiniteMetric& m) {
  const int n = m.size();
  const std::size_t w = words_for(n);
  std::vector<Word> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 * w, 0);
  std::size_t rank = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) line_words(m, u, v, flat.data() + (rank++) * w);
  }
  return assemble(n, flat);
}

LineSet all_lines_parallel(const FiniteMetric& m, int jobs) {
  const int n = m.size();
  const std::size_t w = words_for(n);
  std::vector<Word> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 * w, 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (Vertex u = 0; u < n; ++u) {
    std::size_t rank = pair_rank(n, u, u + 1);
    for (Vertex v = u + 1; v < n; ++v) line_words(m, u, v, flat.data() + (rank++) * w);
  }
  return assemble(n, flat);
}

}  // namespace metric_lines
