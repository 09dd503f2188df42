#include <benchmark/benchmark.h>
#include <omp.h>

#include "cubicdyn/sweep.hpp"

using namespace cubicdyn;

namespace {

const std::vector<OrbitData>& corpus() {
  static const auto ods = canonical_orbit_data(13, {SigmaKind::Id, SigmaKind::Swap12, SigmaKind::Cycle123});
  return ods;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(corpus()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(corpus(), threads));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
