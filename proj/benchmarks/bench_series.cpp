#include <benchmark/benchmark.h>

#include <random>

#include "spectraljet/kernels.hpp"
#include "spectraljet/series.hpp"

using namespace spectraljet;

static TruncatedSeries random_series(int nv, int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TruncatedSeries s(nv, d);
  for (auto& c : s.coefficients()) c = u(rng);
  return s;
}

static void BM_SeriesMultiply(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto a = random_series(nv, d, 1);
  const auto b = random_series(nv, d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["monomials"] = static_cast<double>(a.basis().size());
}
BENCHMARK(BM_SeriesMultiply)->Args({4, 4})->Args({4, 8})->Args({6, 8});

static void BM_ComposeCosSqrt(benchmark::State& state) {
  const int nv = 6, d = 8;
  TruncatedSeries z(nv, d);
  for (int v = 0; v < nv; ++v) {
    const auto x = TruncatedSeries::variable(nv, d, v);
    z += x * x;
  }
  for (auto _ : state) benchmark::DoNotOptimize(compose_univariate(AnalyticKernel::c(), z));
}
BENCHMARK(BM_ComposeCosSqrt);
