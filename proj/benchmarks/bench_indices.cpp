#include <benchmark/benchmark.h>

#include <random>

#include "cvikit/dsi.hpp"
#include "cvikit/validity.hpp"

namespace {

struct Fixture {
  cvikit::PointMatrix points;
  cvikit::Labeling labels;
};

Fixture blobs(std::size_t n, std::size_t k) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<double> v;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % k;
    v.push_back(5.0 * static_cast<double>(c) + g(rng));
    v.push_back(g(rng));
    ids.push_back(c);
  }
  return {cvikit::PointMatrix(n, 2, std::move(v)), cvikit::Labeling(std::move(ids), k)};
}

void BM_Dsi(benchmark::State& state) {
  const auto f = blobs(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cvikit::dsi(f.points, f.labels));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dsi)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void BM_Index(benchmark::State& state, cvikit::Cvi cvi) {
  const auto f = blobs(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(cvikit::compute_cvi(cvi, f.points, f.labels));
}
BENCHMARK_CAPTURE(BM_Index, Dunn, cvikit::Cvi::Dunn)->Arg(1000);
BENCHMARK_CAPTURE(BM_Index, CH, cvikit::Cvi::CalinskiHarabasz)->Arg(1000);
BENCHMARK_CAPTURE(BM_Index, DB, cvikit::Cvi::DaviesBouldin)->Arg(1000);
BENCHMARK_CAPTURE(BM_Index, Silhouette, cvikit::Cvi::Silhouette)->Arg(1000);
BENCHMARK_CAPTURE(BM_Index, WB, cvikit::Cvi::WB)->Arg(1000);
BENCHMARK_CAPTURE(BM_Index, I, cvikit::Cvi::I)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
