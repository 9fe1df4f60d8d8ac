#include <benchmark/benchmark.h>

#include "metric_lines/dh.hpp"
#include "metric_lines/lab.hpp"
#include "metric_lines/lines.hpp"

using namespace metric_lines;

namespace {

void BM_SweepTheoremSerial(benchmark::State& state) {
  const ExhaustiveCorpus corpus{static_cast<int>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(serial::sweep_theorem(corpus).instances);
}
BENCHMARK(BM_SweepTheoremSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SweepTheoremParallel(benchmark::State& state) {
  const ExhaustiveCorpus corpus{static_cast<int>(state.range(0)), false};
  const SweepOptions options{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_theorem(corpus, options).instances);
}
BENCHMARK(BM_SweepTheoremParallel)->Args({5, 1})->Args({6, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

void BM_RandomSweepSerial(benchmark::State& state) {
  const RandomCorpus corpus{static_cast<std::uint64_t>(state.range(0)), 0, 2, 30, {}};
  for (auto _ : state) benchmark::DoNotOptimize(serial::sweep_theorem(corpus).instances);
}
BENCHMARK(BM_RandomSweepSerial)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RandomSweepParallel(benchmark::State& state) {
  const RandomCorpus corpus{static_cast<std::uint64_t>(state.range(0)), 0, 2, 30, {}};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_theorem(corpus).instances);
}
BENCHMARK(BM_RandomSweepParallel)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_AllLines(benchmark::State& state) {
  const auto m = all_pairs_distances(random_dh(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(all_lines(m).distinct_lines());
}
BENCHMARK(BM_AllLines)->Arg(32)->Arg(128)->Arg(256);

void BM_AllLinesParallel(benchmark::State& state) {
  const auto m = all_pairs_distances(random_dh(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(all_lines_parallel(m).distinct_lines());
}
BENCHMARK(BM_AllLinesParallel)->Arg(32)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
