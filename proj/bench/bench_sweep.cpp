// Serial reference kernels vs their OpenMP counterparts.
//
//   ./build/bench/bench_sweep --benchmark_filter=Compare
//   QESA_THREADS=4 ./build/bench/bench_sweep

#include <benchmark/benchmark.h>

#include "qesa/sweep.hpp"

namespace {

qesa::SweepSpec compare_spec(benchmark::State& state) {
  return {1.0, 0.5, 5.0, static_cast<std::size_t>(state.range(0)), qesa::Scale::Linear};
}

void BM_CompareSerial(benchmark::State& state) {
  const auto spec = compare_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(qesa::compare_sweep_serial(spec, 1e-7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CompareParallel(benchmark::State& state) {
  const auto spec = compare_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(qesa::compare_sweep_parallel(spec, 1e-7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = qesa::worker_count();
}

qesa::SurfaceSpec surface_spec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return {-5.0, 5.0, n, 0.05, 5.0, n};
}

void BM_SurfaceSerial(benchmark::State& state) {
  const auto spec = surface_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(qesa::surface_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SurfaceParallel(benchmark::State& state) {
  const auto spec = surface_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(qesa::surface_parallel(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
  state.counters["threads"] = qesa::worker_count();
}

}  // namespace

BENCHMARK(BM_CompareSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceSerial)->Arg(64)->Arg(512);
BENCHMARK(BM_SurfaceParallel)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
