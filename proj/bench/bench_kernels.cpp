// Serial reference vs OpenMP kernels on symbolic powers of the path family.
// Set OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include "wog/cm.hpp"
#include "wog/theorems.hpp"

namespace {

wog::MonomialIdeal workload(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto t = static_cast<unsigned>(state.range(1));
  return wog::symbolic_power(wog::example_family(k), t);
}

void BM_Betti(benchmark::State& state, wog::Exec exec) {
  const auto ideal = workload(state);
  wog::BettiOptions options;
  options.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(wog::betti_table(ideal, options));
}

void BM_Colon(benchmark::State& state, wog::Exec exec) {
  const auto ideal = workload(state);
  for (auto _ : state) benchmark::DoNotOptimize(wog::depth_by_colon(ideal, {}, 10'000'000, exec));
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({2, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Betti, serial, wog::Exec::serial)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Betti, parallel, wog::Exec::parallel)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Colon, serial, wog::Exec::serial)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Colon, parallel, wog::Exec::parallel)->Apply(shapes);

BENCHMARK_MAIN();
