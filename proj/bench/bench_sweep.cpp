#include <benchmark/benchmark.h>

#include <string>

#include "symkin/motion_spec.hpp"
#include "symkin/report.hpp"

namespace {

using namespace symkin;

const MotionSpec& cardan() {
  static const MotionSpec spec = parse_spec(preset_document("cardan"));
  return spec;
}

template <auto Kernel>
void BM_Sweep(benchmark::State& state) {
  const auto grid = sample_grid(0.0, 6.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cardan(), grid, 6));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Polodes(benchmark::State& state) {
  const auto grid = sample_grid(0.0, 6.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cardan(), grid, 0.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Sweep<kernels::serial::analyze_sweep>)->Name("sweep/serial")->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_Sweep<kernels::omp::analyze_sweep>)->Name("sweep/omp")->RangeMultiplier(8)->Range(64, 32768)->UseRealTime();
BENCHMARK(BM_Polodes<kernels::serial::sample_polodes>)->Name("polodes/serial")->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_Polodes<kernels::omp::sample_polodes>)->Name("polodes/omp")->RangeMultiplier(8)->Range(64, 32768)->UseRealTime();

BENCHMARK_MAIN();
