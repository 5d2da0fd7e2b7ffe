#include <benchmark/benchmark.h>

#include "orbitcensus/census.hpp"
#include "orbitcensus/graph.hpp"

using namespace orbitcensus;

static void BM_BruteCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::brute_census(n, 3));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_BruteCensus)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_BestCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::best_census(n, 3));
}
BENCHMARK(BM_BestCensus)->Arg(16)->Arg(32)->Arg(50)->Arg(70)->Unit(benchmark::kMillisecond);

static void BM_BestClusterSize(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const std::vector<std::uint32_t> h(std::size_t{1} << p, 4);
  const EdgeCountVector v(p, h);
  for (auto _ : state) benchmark::DoNotOptimize(census::best_cluster_size(v));
}
BENCHMARK(BM_BestClusterSize)->DenseRange(2, 6);

static void BM_CountAdmissible(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graph::count_admissible(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_CountAdmissible)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
