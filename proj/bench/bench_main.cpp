#include "qgrass/hh1solver.hpp"
#include "qgrass/qgrass.hpp"

#include <benchmark/benchmark.h>

using namespace qgrass;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) ? ExecPolicy::parallel : ExecPolicy::serial;
}

void BM_BuildStraightening(benchmark::State& state) {
  set_cache_directory({});
  Ambient a{2, 5};
  for (auto _ : state) {
    clear_straightening_memory();
    clear_product_caches();
    warm_cache(a, 3, policy_of(state));
  }
}

void BM_DerSpaceShiftZero(benchmark::State& state) {
  set_cache_directory({});
  Ambient a{2, 5};
  warm_cache(a, 3, ExecPolicy::serial);
  SolveOptions opt;
  opt.policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_der_space(a, 0, 3, opt));
}

void BM_QMDerivations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qm_derivation_space({3, 4}, true, policy_of(state)));
}

} // namespace

BENCHMARK(BM_BuildStraightening)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerSpaceShiftZero)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QMDerivations)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
