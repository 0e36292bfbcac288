#include <benchmark/benchmark.h>

#include "spectraljet/manifolds.hpp"

using namespace spectraljet;

static void BM_SphereJet(benchmark::State& state) {
  const auto model = SpectralModel::sphere(3, 1.0);
  const double t = 0.1 / static_cast<double>(state.range(0));
  const auto a = MultiIndex::from_indices({1, 1}, 3);
  const auto b = MultiIndex::from_indices({2, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_jet(model, t, a, b));
}
BENCHMARK(BM_SphereJet)->Arg(1)->Arg(16)->Arg(64);

static void BM_TorusJet(benchmark::State& state) {
  const auto model = SpectralModel::torus({1.0, 1.3});
  const auto a = MultiIndex::from_indices({1, 1, 2}, 2);
  const auto b = MultiIndex::from_indices({2}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_jet(model, 0.001, a, b));
}
BENCHMARK(BM_TorusJet);

static void BM_GaussDifference(benchmark::State& state) {
  const auto model = SpectralModel::sphere(3, 1.0);
  const auto il = MultiIndex::from_indices({1, 1}, 3);
  const auto jk = MultiIndex::from_indices({2, 2}, 3);
  const auto ik = MultiIndex::from_indices({1, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_jet_difference(model, 0.01, il, jk, ik, ik));
}
BENCHMARK(BM_GaussDifference);

static void BM_JetGram(benchmark::State& state) {
  const auto model = SpectralModel::sphere(2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(jet_gram(model, 0.01, 2));
}
BENCHMARK(BM_JetGram)->Unit(benchmark::kMillisecond);
