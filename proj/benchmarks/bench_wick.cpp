#include <benchmark/benchmark.h>

#include "spectraljet/lattice.hpp"
#include "spectraljet/wick.hpp"

using namespace spectraljet;

static void BM_WickA(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const auto pool = multi_indices_of_degree(3, deg);
  for (auto _ : state) {
    for (const auto& a : pool) benchmark::DoNotOptimize(wick_a(a, pool.front()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pool.size()));
}
BENCHMARK(BM_WickA)->Arg(4)->Arg(8)->Arg(16);

static void BM_WickB(benchmark::State& state) {
  const auto a = MultiIndex::from_counts({6, 2, 4});
  const auto b = MultiIndex::from_counts({2, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(wick_b(a, b));
}
BENCHMARK(BM_WickB);

static void BM_Graphs(benchmark::State& state) {
  const auto a = MultiIndex::from_counts({3, 2, 1});
  const auto b = MultiIndex::from_counts({1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible_graphs(a, b));
}
BENCHMARK(BM_Graphs);

static void BM_SampleTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_triples(3, 8, 1000, 42));
}
BENCHMARK(BM_SampleTriples)->Unit(benchmark::kMillisecond);
