// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qseal/adversary.hpp"
#include "qseal/analysis.hpp"
#include "qseal/kernels.hpp"

namespace {

using namespace qseal;

void BM_BuildRho(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rho(0, n, n / 3, n, exec));
}
BENCHMARK_CAPTURE(BM_BuildRho, parallel, Execution::kParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildRho, serial, Execution::kSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

template <double (*Distance)(const DensityMatrix&, const DensityMatrix&)>
void BM_HsDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = build_rho(0, n, n / 3, n);
  const auto b = build_rho(1, n, n / 3, n);
  for (auto _ : state) benchmark::DoNotOptimize(Distance(a, b));
}
BENCHMARK(BM_HsDistance<kernels::hs_distance_squared>)->DenseRange(6, 10, 2);
BENCHMARK(BM_HsDistance<kernels::serial::hs_distance_squared>)->DenseRange(6, 10, 2);

void BM_RunTrials(benchmark::State& state, bool parallel) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  const auto mode = VerificationMode::sender_all();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? run_trials(Strategy::kSingleQubit, {25, 9, 0}, mode, trials, 1)
                                      : serial::run_trials(Strategy::kSingleQubit, {25, 9, 0}, mode, trials, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_RunTrials, parallel, true)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunTrials, serial, false)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
