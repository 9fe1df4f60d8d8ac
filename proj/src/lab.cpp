#include "metric_lines/lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lab_internal.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/graph_io.hpp"

namespace metric_lines {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_dh(const Graph& g) {
  if (g.order() < 2) throw InputError("need a graph on at least two vertices");
  const auto result = recognize_pruning(g);
  if (!result.accepted()) {
    std::string residual;
    for (Vertex v : result.witness->residual) residual += (residual.empty() ? "" : " ") + std::to_string(v);
    throw InputError("graph is not distance-hereditary: pruning is stuck on residual {" + residual + "}");
  }
}

}  // namespace

namespace detail {

Verdict graph_verdict(const Graph& g, std::string instance, const LineSet& lines) {
  auto v = make_verdict(std::move(instance), lines);
  if (!v.satisfies) v.witness = "g6:" + to_graph6(g);
  return v;
}

LemmaResult lemma_triangle_unchecked(const Graph& g, const FiniteMetric& m, const LineSet& lines) {
  for (const auto& [x, y] : g.edges()) {
    if (edge_in_triangle(g, x, y)) continue;
    if (static_cast<int>(lines.line(x, y).size()) != m.size()) return {false, {x, y}};
  }
  return {};
}

LemmaResult lemma_xaxb_unchecked(const FiniteMetric& m, const LineSet& lines) {
  const int n = m.size();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex a = 0; a < n; ++a) {
      if (a == x) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (b == x || lines.line_index(x, a) != lines.line_index(x, b)) continue;
        const bool universal = static_cast<int>(lines.line(a, b).size()) == n;
        if (!universal && m(a, x) + m(x, b) != m(a, b)) return {false, {x, a, b}};
      }
    }
  }
  return {};
}

std::string graph_instance(const Graph& g) { return "g6:" + to_graph6(g); }
std::string random_instance(std::uint64_t index) { return "random#" + std::to_string(index); }
std::string two_metric_instance(int n, std::uint64_t mask) {
  return "two-metric:n=" + std::to_string(n) + ":mask=" + std::to_string(mask);
}

void require_exhaustive(const ExhaustiveCorpus& corpus) {
  if (corpus.n_max < 2 || corpus.n_max > kMaxEnumerationOrder) {
    throw InputError("exhaustive corpus needs 2 <= n_max <= " + std::to_string(kMaxEnumerationOrder));
  }
}

void require_random(const RandomCorpus& corpus) {
  if (corpus.n_min < 2 || corpus.n_max < corpus.n_min) throw InputError("random corpus needs 2 <= n_min <= n_max");
}

void require_two_metric(const TwoMetricCorpus& corpus) {
  if (corpus.n_min < 2 || corpus.n_max < corpus.n_min || corpus.n_max > kMaxTwoMetricOrder) {
    throw InputError("two-metric sweep needs 2 <= n <= " + std::to_string(kMaxTwoMetricOrder));
  }
}

void check_lemmas(const Graph& g, const std::string& instance, LemmaSweepReport& report) {
  const auto m = all_pairs_distances(g);
  const auto lines = all_lines(m);
  ++report.instances;
  if (auto r = lemma_triangle_unchecked(g, m, lines); !r.holds) {
    report.failures.push_back({instance, "triangle", std::move(r.witness)});
  }
  if (auto r = lemma_xaxb_unchecked(m, lines); !r.holds) {
    report.failures.push_back({instance, "xaxb", std::move(r.witness)});
  }
}

}  // namespace detail

Verdict make_verdict(std::string instance, const LineSet& lines) {
  Verdict v;
  v.instance = std::move(instance);
  v.n = lines.points();
  v.distinct_lines = lines.distinct_lines();
  v.has_universal = lines.has_universal();
  v.satisfies = v.has_universal || v.distinct_lines >= static_cast<std::size_t>(v.n);
  return v;
}

Verdict check_chen_chvatal(const FiniteMetric& m, std::string instance) {
  auto v = make_verdict(std::move(instance), all_lines(m));
  if (!v.satisfies) v.witness = format_metric(m);
  return v;
}

Verdict check_main_theorem(const Graph& g) {
  require_dh(g);
  return detail::graph_verdict(g, detail::graph_instance(g), all_lines(all_pairs_distances(g)));
}

LemmaResult verify_lemma_triangle(const Graph& g) {
  require_dh(g);
  const auto m = all_pairs_distances(g);
  return detail::lemma_triangle_unchecked(g, m, all_lines(m));
}

LemmaResult verify_lemma_xaxb(const Graph& g) {
  require_dh(g);
  const auto m = all_pairs_distances(g);
  return detail::lemma_xaxb_unchecked(m, all_lines(m));
}

Graph random_corpus_graph(const RandomCorpus& corpus, std::uint64_t index) {
  detail::require_random(corpus);
  const std::uint64_t instance_seed = splitmix64(corpus.seed + splitmix64(index));
  const auto span = static_cast<std::uint64_t>(corpus.n_max - corpus.n_min + 1);
  const int n = corpus.n_min + static_cast<int>(instance_seed % span);
  return random_dh(n, splitmix64(instance_seed), corpus.weights);
}

FiniteMetric two_metric_from_mask(int n, std::uint64_t mask) {
  if (n < 2 || n > kMaxMaskOrder) throw InputError("two-metric order out of range");
  std::vector<Distance> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const Distance value = ((mask >> edge_bit(i, j)) & 1U) ? 2 : 1;
      d[static_cast<std::size_t>(i * n + j)] = d[static_cast<std::size_t>(j * n + i)] = value;
    }
  }
  return FiniteMetric(n, std::move(d));
}

void SweepReport::add(const Verdict& v) {
  ++instances;
  auto it = std::lower_bound(records.begin(), records.end(), v.n,
                             [](const SizeRecord& r, int n) { return r.n < n; });
  if (it == records.end() || it->n != v.n) it = records.insert(it, SizeRecord{v.n, 0, std::nullopt, 0});
  ++it->instances;
  if (!v.has_universal) {
    it->min_lines_non_universal = std::min(it->min_lines_non_universal.value_or(v.distinct_lines), v.distinct_lines);
  }
  if (!v.satisfies) {
    ++it->violations;
    violations.push_back(v);
  }
}

void SweepReport::merge(const SweepReport& other) {
  scanned += other.scanned;
  instances += other.instances;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& rec : other.records) {
    auto it = std::lower_bound(records.begin(), records.end(), rec.n,
                               [](const SizeRecord& r, int n) { return r.n < n; });
    if (it == records.end() || it->n != rec.n) {
      records.insert(it, rec);
      continue;
    }
    it->instances += rec.instances;
    it->violations += rec.violations;
    if (rec.min_lines_non_universal) {
      it->min_lines_non_universal =
          std::min(it->min_lines_non_universal.value_or(*rec.min_lines_non_universal), *rec.min_lines_non_universal);
    }
  }
}

bool SweepReport::same_results(const SweepReport& other) const {
  return property == other.property && corpus == other.corpus && scanned == other.scanned &&
         instances == other.instances && violations == other.violations && records == other.records;
}

std::vector<ScalingRow> scaling_experiment(std::span<const int> sides, int jobs) {
  std::vector<ScalingRow> rows;
  for (int s : sides) {
    if (s < 3) {
      throw InputError("side " + std::to_string(s) +
                       " too small: with parts of size 2 every same-part line is universal; use s >= 3");
    }
    const std::vector<int> parts(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), s);
    const auto lines = all_lines_parallel(all_pairs_distances(complete_multipartite(parts)), jobs);
    ScalingRow row;
    row.side = s;
    row.n = s * s * s;
    row.distinct_lines = lines.distinct_lines();
    row.has_universal = lines.has_universal();
    row.n_4_3 = std::pow(static_cast<double>(s), 4.0);  // (s^3)^(4/3), exact
    row.ratio = static_cast<double>(row.distinct_lines) / row.n_4_3;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace metric_lines
