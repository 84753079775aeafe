#include <benchmark/benchmark.h>

#include "qtheta/qtheta.hpp"

namespace {

using namespace qtheta;

void BM_CosetThetaFormula(benchmark::State& state) {
  const Level level = make_level(3, 59);
  const auto precision = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coset_theta_formula(level, 1, 1, precision));
}
BENCHMARK(BM_CosetThetaFormula)->RangeMultiplier(4)->Range(64, 4096);

void BM_CosetThetaEnum(benchmark::State& state) {
  const Level level = make_level(3, 59);
  const auto precision = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coset_theta_enum(level, 1, 1, precision));
}
BENCHMARK(BM_CosetThetaEnum)->RangeMultiplier(4)->Range(64, 4096);

LinearCode sample_code(const QuotientRing& r, std::size_t n) {
  Word g(n, r.make(1, 0));
  Word h(n, RingElem{});
  h[0] = r.make(0, 1);
  return LinearCode::span(r, {g, h});
}

void BM_ThetaViaCwe(benchmark::State& state) {
  const Level level = make_level(3, 7);
  const LinearCode code = sample_code(level.ring(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    CosetThetaCache cache;  // include the coset theta table in the measurement
    benchmark::DoNotOptimize(theta_via_cwe(code, level, 60, cache));
  }
}
BENCHMARK(BM_ThetaViaCwe)->DenseRange(1, 4);

void BM_ThetaViaEnum(benchmark::State& state) {
  const Level level = make_level(3, 7);
  const LinearCode code = sample_code(level.ring(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_via_enum(code, level, 60));
}
BENCHMARK(BM_ThetaViaEnum)->DenseRange(1, 4);

}  // namespace
