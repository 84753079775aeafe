#include <benchmark/benchmark.h>

#include "qtheta/qtheta.hpp"

namespace {

using namespace qtheta;

void BM_ExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = build_matrix(make_level(3, 59), n, 120);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRank)->DenseRange(3, 5);

void BM_PrefixRanks(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = build_matrix(make_level(3, 59), n, 120);
  for (auto _ : state) benchmark::DoNotOptimize(prefix_ranks(m));
}
BENCHMARK(BM_PrefixRanks)->DenseRange(3, 5);

void BM_NullityExperiment(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CosetThetaCache cache;
    benchmark::DoNotOptimize(nullity_experiment(3, n, 59, cache));
  }
}
BENCHMARK(BM_NullityExperiment)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
