#include <benchmark/benchmark.h>

#include "hodge/hodge_system.hpp"
#include "hodge/inequalities.hpp"
#include "hodge/search_oracle.hpp"

namespace {

hodge::HodgeSystem tower(std::int64_t r0, std::int64_t n) {
  hodge::GeometricContext c;
  c.dim = 2;
  c.omega_degree = 3;
  return hodge::derive_components(hodge::BundleData::semistable_bundle(r0, 1), c,
                                  n);
}

void BM_Enumerate(benchmark::State& state) {
  const auto sys = tower(state.range(0), 3);
  for (auto _ : state) {
    std::uint64_t n = hodge::visit_profiles(sys, {}, [](auto) {});
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Arg(4);

void BM_MaxSlope(benchmark::State& state) {
  const auto sys = tower(state.range(0), 3);
  hodge::SearchOptions o;
  o.mode = hodge::ConstraintMode::Conservative;
  o.parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(hodge::max_slope_profile(sys, o));
}
BENCHMARK(BM_MaxSlope)
    ->Args({3, 0})
    ->Args({3, 1})
    ->Args({5, 0})
    ->Args({5, 1})
    ->Unit(benchmark::kMillisecond);

void BM_InequalitySweep(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hodge::sweep_hodge_sum(6, state.range(0)));
}
BENCHMARK(BM_InequalitySweep)->Arg(8)->Arg(14);

void BM_Criteria(benchmark::State& state) {
  const auto sys = tower(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hodge::criteria_verdict(sys));
}
BENCHMARK(BM_Criteria)->Arg(3)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
