#include <algorithm>
#include <chrono>
#include <exception>

#include <omp.h>

#include "lab_internal.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/lab.hpp"

namespace metric_lines {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMaxChunks = 4096;

void merge_into(SweepReport& into, const SweepReport& from) { into.merge(from); }

void merge_into(ExhaustivePass& into, const ExhaustivePass& from) {
  into.theorem.merge(from.theorem);
  into.conjecture.merge(from.conjecture);
}

void merge_into(LemmaSweepReport& into, const LemmaSweepReport& from) {
  into.scanned += from.scanned;
  into.instances += from.instances;
  into.failures.insert(into.failures.end(), from.failures.begin(), from.failures.end());
}

/// Splits [0, total) into contiguous chunks processed by an OpenMP team and
/// merges the partial results in index order. `work(partial, index)`.
template <typename Partial, typename Work>
void run_chunks(std::uint64_t total, int jobs, Partial& result, const Partial& empty, Work work) {
  if (total == 0) return;
  const std::uint64_t chunks = std::min(total, kMaxChunks);
  std::vector<Partial> partial(chunks, empty);
  std::exception_ptr failure;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    const std::uint64_t begin = total / chunks * cu + std::min(cu, total % chunks);
    const std::uint64_t end = begin + total / chunks + (cu < total % chunks ? 1 : 0);
    try {
      for (std::uint64_t i = begin; i < end; ++i) work(partial[cu], i);
    } catch (...) {
#pragma omp critical(metric_lines_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (const auto& p : partial) merge_into(result, p);
}

/// Connected (and, when asked, canonical) graph for mask, or nullopt.
std::optional<Graph> exhaustive_member(int n, bool canonical, std::uint64_t mask) {
  if (!mask_connected(n, mask)) return std::nullopt;
  auto g = graph_from_edge_mask(n, mask);
  if (canonical && canonical_code(g) != mask) return std::nullopt;
  return g;
}

SweepReport empty_report(const std::string& property, const CorpusSpec& corpus) {
  SweepReport r;
  r.property = property;
  r.corpus = corpus;
  return r;
}

ExhaustivePass run_exhaustive(const ExhaustiveCorpus& corpus, const SweepOptions& options, bool with_conjecture) {
  detail::require_exhaustive(corpus);
  const auto start = Clock::now();
  ExhaustivePass out{empty_report("main-theorem", corpus), empty_report("chen-chvatal", corpus)};
  const ExhaustivePass empty = out;
  for (int n = 2; n <= corpus.n_max; ++n) {
    run_chunks(std::uint64_t{1} << pair_count(n), options.jobs, out, empty, [&](ExhaustivePass& p, std::uint64_t mask) {
      const auto g = exhaustive_member(n, corpus.canonical, mask);
      if (!g) return;
      ++p.theorem.scanned;
      ++p.conjecture.scanned;
      const bool dh = is_distance_hereditary(*g);
      if (!dh && !with_conjecture) return;
      const auto v = detail::graph_verdict(*g, detail::graph_instance(*g), all_lines(all_pairs_distances(*g)));
      if (with_conjecture) p.conjecture.add(v);
      if (dh) p.theorem.add(v);
    });
  }
  out.theorem.duration = out.conjecture.duration = Clock::now() - start;
  return out;
}

}  // namespace

ExhaustivePass exhaustive_pass(const ExhaustiveCorpus& corpus, const SweepOptions& options) {
  return run_exhaustive(corpus, options, true);
}

SweepReport sweep_conjecture(const ExhaustiveCorpus& corpus, const SweepOptions& options) {
  return run_exhaustive(corpus, options, true).conjecture;
}

SweepReport sweep_theorem(const GraphCorpus& corpus, const SweepOptions& options) {
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus)) return run_exhaustive(*ex, options, false).theorem;

  const auto& random = std::get<RandomCorpus>(corpus);
  detail::require_random(random);
  const auto start = Clock::now();
  SweepReport out = empty_report("main-theorem", random);
  const SweepReport empty = out;
  run_chunks(random.count, options.jobs, out, empty, [&](SweepReport& p, std::uint64_t i) {
    const auto g = random_corpus_graph(random, i);
    ++p.scanned;
    if (is_distance_hereditary(g)) p.add(detail::graph_verdict(g, detail::random_instance(i), all_lines(all_pairs_distances(g))));
  });
  out.duration = Clock::now() - start;
  return out;
}

SweepReport sweep_two_metric(const TwoMetricCorpus& corpus, const SweepOptions& options) {
  detail::require_two_metric(corpus);
  const auto start = Clock::now();
  SweepReport out = empty_report("two-metric", corpus);
  const SweepReport empty = out;
  for (int n = corpus.n_min; n <= corpus.n_max; ++n) {
    run_chunks(std::uint64_t{1} << pair_count(n), options.jobs, out, empty, [&](SweepReport& p, std::uint64_t mask) {
      ++p.scanned;
      p.add(check_chen_chvatal(two_metric_from_mask(n, mask), detail::two_metric_instance(n, mask)));
    });
  }
  out.duration = Clock::now() - start;
  return out;
}

SweepReport sweep_two_metric(int n, const SweepOptions& options) {
  return sweep_two_metric(TwoMetricCorpus{n, n}, options);
}

LemmaSweepReport sweep_lemmas(const GraphCorpus& corpus, const SweepOptions& options) {
  const auto start = Clock::now();
  LemmaSweepReport out;
  out.corpus = std::visit([](const auto& c) -> CorpusSpec { return c; }, corpus);
  const LemmaSweepReport empty = out;
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus)) {
    detail::require_exhaustive(*ex);
    for (int n = 2; n <= ex->n_max; ++n) {
      run_chunks(std::uint64_t{1} << pair_count(n), options.jobs, out, empty,
                 [&](LemmaSweepReport& p, std::uint64_t mask) {
                   const auto g = exhaustive_member(n, ex->canonical, mask);
                   if (!g) return;
                   ++p.scanned;
                   if (is_distance_hereditary(*g)) detail::check_lemmas(*g, detail::graph_instance(*g), p);
                 });
    }
  } else {
    const auto& random = std::get<RandomCorpus>(corpus);
    detail::require_random(random);
    run_chunks(random.count, options.jobs, out, empty, [&](LemmaSweepReport& p, std::uint64_t i) {
      const auto g = random_corpus_graph(random, i);
      ++p.scanned;
      if (is_distance_hereditary(g)) detail::check_lemmas(g, detail::random_instance(i), p);
    });
  }
  out.duration = Clock::now() - start;
  return out;
}

}  // namespace metric_lines
