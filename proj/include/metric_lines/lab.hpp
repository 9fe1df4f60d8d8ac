#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "metric_lines/dh.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/metric.hpp"

namespace metric_lines {

/// Outcome of "at least n distinct lines or a universal line" on one instance.
struct Verdict {
  std::string instance;
  int n = 0;
  std::size_t distinct_lines = 0;
  bool has_universal = false;
  bool satisfies = false;
  std::optional<std::string> witness;  // the instance itself, on violation

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict make_verdict(std::string instance, const LineSet& lines);

/// Works for any metric, graph-induced or not.
Verdict check_chen_chvatal(const FiniteMetric& m, std::string instance = "metric");

/// Throws InputError when g is not a connected distance-hereditary graph on
/// at least two vertices. Instance ids are "g6:<graph6>".
Verdict check_main_theorem(const Graph& g);

struct LemmaResult {
  bool holds = true;
  std::vector<Vertex> witness;  // violating edge (x, y) or triple (x, a, b)
};

/// Every edge xy lies in a triangle or spans a universal line.
LemmaResult verify_lemma_triangle(const Graph& g);

/// Whenever line(x,a) = line(x,b), line(a,b) is universal or [axb].
LemmaResult verify_lemma_xaxb(const Graph& g);

struct ExhaustiveCorpus {
  int n_max = kMaxExhaustiveDefault;
  bool canonical = false;

  static constexpr int kMaxExhaustiveDefault = 7;
  friend bool operator==(const ExhaustiveCorpus&, const ExhaustiveCorpus&) = default;
};

/// Instance i draws its order and its random_dh seed from (seed, i) alone,
/// so the corpus does not depend on scheduling.
struct RandomCorpus {
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
  int n_min = 2;
  int n_max = 30;
  StepWeights weights{};

  friend bool operator==(const RandomCorpus&, const RandomCorpus&) = default;
};

struct TwoMetricCorpus {
  int n_min = 2;
  int n_max = 6;

  friend bool operator==(const TwoMetricCorpus&, const TwoMetricCorpus&) = default;
};

using GraphCorpus = std::variant<ExhaustiveCorpus, RandomCorpus>;
using CorpusSpec = std::variant<ExhaustiveCorpus, RandomCorpus, TwoMetricCorpus>;

/// The i-th member of a random corpus.
Graph random_corpus_graph(const RandomCorpus& corpus, std::uint64_t index);

struct SizeRecord {
  int n = 0;
  std::uint64_t instances = 0;
  std::optional<std::size_t> min_lines_non_universal;
  std::uint64_t violations = 0;

  friend bool operator==(const SizeRecord&, const SizeRecord&) = default;
};

struct SweepReport {
  std::string property;  // "main-theorem", "chen-chvatal" or "two-metric"
  CorpusSpec corpus;
  std::uint64_t scanned = 0;    // corpus members visited
  std::uint64_t instances = 0;  // members that passed the filter and were checked
  std::vector<Verdict> violations;
  std::vector<SizeRecord> records;  // ascending n
  std::chrono::duration<double, std::milli> duration{};

  /// Folds one verdict into the counters and records.
  void add(const Verdict& v);
  /// Associative; `other` must cover instances after this report's.
  void merge(const SweepReport& other);
  bool same_results(const SweepReport& other) const;
};

struct LemmaFailure {
  std::string instance;
  std::string lemma;  // "triangle" or "xaxb"
  std::vector<Vertex> witness;

  friend bool operator==(const LemmaFailure&, const LemmaFailure&) = default;
};

struct LemmaSweepReport {
  CorpusSpec corpus;
  std::uint64_t scanned = 0;
  std::uint64_t instances = 0;
  std::vector<LemmaFailure> failures;
  std::chrono::duration<double, std::milli> duration{};
};

struct ExhaustivePass {
  SweepReport theorem;     // distance-hereditary graphs only
  SweepReport conjecture;  // every connected graph
};

struct SweepOptions {
  int jobs = 0;  // 0 = OpenMP default
};

/// OpenMP kernels. Each partitions its corpus over a thread team and merges
/// partial reports in corpus order, so results match the serial reference.
ExhaustivePass exhaustive_pass(const ExhaustiveCorpus& corpus, const SweepOptions& options = {});
SweepReport sweep_theorem(const GraphCorpus& corpus, const SweepOptions& options = {});
SweepReport sweep_conjecture(const ExhaustiveCorpus& corpus, const SweepOptions& options = {});
SweepReport sweep_two_metric(const TwoMetricCorpus& corpus, const SweepOptions& options = {});
SweepReport sweep_two_metric(int n, const SweepOptions& options = {});
LemmaSweepReport sweep_lemmas(const GraphCorpus& corpus, const SweepOptions& options = {});

/// Single-threaded reference implementations built on the streaming
/// enumerator. Kept for cross-checking the kernels above.
namespace serial {
ExhaustivePass exhaustive_pass(const ExhaustiveCorpus& corpus);
SweepReport sweep_theorem(const GraphCorpus& corpus);
SweepReport sweep_conjecture(const ExhaustiveCorpus& corpus);
SweepReport sweep_two_metric(const TwoMetricCorpus& corpus);
LemmaSweepReport sweep_lemmas(const GraphCorpus& corpus);
}  // namespace serial

/// Symmetric {1,2}-assignment number `mask` on n points; bit edge_bit(i,j)
/// set means d(i,j) = 2.
FiniteMetric two_metric_from_mask(int n, std::uint64_t mask);

inline constexpr int kMaxTwoMetricOrder = 6;

struct ScalingRow {
  int side = 0;
  int n = 0;
  std::size_t distinct_lines = 0;
  bool has_universal = false;
  double n_4_3 = 0.0;
  double ratio = 0.0;
};

/// For each side s >= 3: complete multipartite graph with s^2 parts of size
/// s, distinct lines counted by brute force.
std::vector<ScalingRow> scaling_experiment(std::span<const int> sides, int jobs = 0);

}  // namespace metric_lines
