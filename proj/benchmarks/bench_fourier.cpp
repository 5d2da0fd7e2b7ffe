#include <benchmark/benchmark.h>

#include "orbitcensus/fourier.hpp"

using namespace orbitcensus;

static void BM_FullTraceGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier::FullTraceGrid(n, n + 1));
}
BENCHMARK(BM_FullTraceGrid)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_FourierMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier::fourier_moment(n, 3, 2));
}
BENCHMARK(BM_FourierMoment)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);
