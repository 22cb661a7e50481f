// Serial vs OpenMP curve kernels on torus-grid medial diagrams.
#include <benchmark/benchmark.h>

#include "altcert/curves.hpp"
#include "fixtures.hpp"

namespace {

using namespace altcert;

SurfaceMap medial_of_grid(int n) {
  return fixtures::alternating_medial(fixtures::torus_grid(n, n)).map();
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto m = medial_of_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves_serial(m, 2));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto m = medial_of_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(m, 2));
}

void BM_CutAllSerial(benchmark::State& state) {
  const auto m = medial_of_grid(static_cast<int>(state.range(0)));
  const auto curves = enumerate_curves(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cut_all_serial(m, curves));
  state.counters["curves"] = static_cast<double>(curves.size());
}

void BM_CutAllParallel(benchmark::State& state) {
  const auto m = medial_of_grid(static_cast<int>(state.range(0)));
  const auto curves = enumerate_curves(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cut_all(m, curves));
  state.counters["curves"] = static_cast<double>(curves.size());
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CutAllSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CutAllParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
