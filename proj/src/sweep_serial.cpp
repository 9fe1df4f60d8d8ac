#include <chrono>

#include "lab_internal.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/lab.hpp"

namespace metric_lines::serial {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Visit>
void for_each_graph(const GraphCorpus& corpus, Visit visit) {
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus)) {
    detail::require_exhaustive(*ex);
    for (int n = 2; n <= ex->n_max; ++n) {
      enumerate_connected_graphs(n, ex->canonical,
                                 [&](const Graph& g, std::uint64_t) { visit(g, detail::graph_instance(g)); });
    }
    return;
  }
  const auto& random = std::get<RandomCorpus>(corpus);
  detail::require_random(random);
  for (std::uint64_t i = 0; i < random.count; ++i) visit(random_corpus_graph(random, i), detail::random_instance(i));
}

CorpusSpec widen(const GraphCorpus& corpus) {
  return std::visit([](const auto& c) -> CorpusSpec { return c; }, corpus);
}

}  // namespace

ExhaustivePass exhaustive_pass(const ExhaustiveCorpus& corpus) {
  const auto start = Clock::now();
  ExhaustivePass out;
  out.theorem.property = "main-theorem";
  out.conjecture.property = "chen-chvatal";
  out.theorem.corpus = out.conjecture.corpus = corpus;
  for_each_graph(GraphCorpus{corpus}, [&](const Graph& g, const std::string& instance) {
    ++out.conjecture.scanned;
    ++out.theorem.scanned;
    const auto v = detail::graph_verdict(g, instance, all_lines(all_pairs_distances(g)));
    out.conjecture.add(v);
    if (is_distance_hereditary(g)) out.theorem.add(v);
  });
  out.theorem.duration = out.conjecture.duration = Clock::now() - start;
  return out;
}

SweepReport sweep_theorem(const GraphCorpus& corpus) {
  const auto start = Clock::now();
  SweepReport out;
  out.property = "main-theorem";
  out.corpus = widen(corpus);
  for_each_graph(corpus, [&](const Graph& g, const std::string& instance) {
    ++out.scanned;
    if (is_distance_hereditary(g)) out.add(detail::graph_verdict(g, instance, all_lines(all_pairs_distances(g))));
  });
  out.duration = Clock::now() - start;
  return out;
}

SweepReport sweep_conjecture(const ExhaustiveCorpus& corpus) {
  const auto start = Clock::now();
  SweepReport out;
  out.property = "chen-chvatal";
  out.corpus = corpus;
  for_each_graph(GraphCorpus{corpus}, [&](const Graph& g, const std::string& instance) {
    ++out.scanned;
    out.add(detail::graph_verdict(g, instance, all_lines(all_pairs_distances(g))));
  });
  out.duration = Clock::now() - start;
  return out;
}

SweepReport sweep_two_metric(const TwoMetricCorpus& corpus) {
  detail::require_two_metric(corpus);
  const auto start = Clock::now();
  SweepReport out;
  out.property = "two-metric";
  out.corpus = corpus;
  for (int n = corpus.n_min; n <= corpus.n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++out.scanned;
      out.add(check_chen_chvatal(two_metric_from_mask(n, mask), detail::two_metric_instance(n, mask)));
    }
  }
  out.duration = Clock::now() - start;
  return out;
}

LemmaSweepReport sweep_lemmas(const GraphCorpus& corpus) {
  const auto start = Clock::now();
  LemmaSweepReport out;
  out.corpus = widen(corpus);
  for_each_graph(corpus, [&](const Graph& g, const std::string& instance) {
    ++out.scanned;
    if (is_distance_hereditary(g)) detail::check_lemmas(g, instance, out);
  });
  out.duration = Clock::now() - start;
  return out;
}

}  // namespace metric_lines::serial
