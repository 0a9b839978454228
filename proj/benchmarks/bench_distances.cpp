#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "cvikit/ks.hpp"
#include "cvikit/pairwise.hpp"

namespace {

cvikit::PointMatrix points(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<double> v(n * d);
  for (double& x : v) x = g(rng);
  return cvikit::PointMatrix(n, d, std::move(v));
}

void BM_PairwiseDistances(benchmark::State& state) {
  const auto p = points(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(cvikit::pairwise_distances(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseDistances)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_KsTwoSample(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<double> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (double& x : a) x = g(rng);
  for (double& x : b) x = g(rng) + 0.1;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (auto _ : state) benchmark::DoNotOptimize(cvikit::ks_two_sample(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KsTwoSample)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

}  // namespace
