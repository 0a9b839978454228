#include <doctest.h>

#include "cvikit/ari.hpp"
#include "cvikit/clustering.hpp"
#include "cvikit/error.hpp"
#include "test_support.hpp"

using namespace cvikit;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

bool no_empty_cluster(const Labeling& l) {
  for (std::size_t s : l.cluster_sizes())
    if (s == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("clustering") {

TEST_CASE("k-means separates two far blobs") {
  const auto [p, truth] = testing::blobs({{0, 0}, {100, 100}}, 50, 1.0, 1);
  const auto r = kmeans(p, ClusteringConfig::defaults(Algorithm::KMeans, 2, 7));
  CHECK(adjusted_rand_index(truth, r.labels) == 1.0);
  CHECK(r.centers.rows() == 2);
  CHECK(r.inertia > 0.0);
}

TEST_CASE("k-means with one cluster per point has zero inertia") {
  const auto p = testing::random_points(12, 3, 4);
  const auto r = kmeans(p, ClusteringConfig::defaults(Algorithm::KMeans, 12, 1));
  CHECK(r.inertia == 0.0);
  CHECK(r.labels.k() == 12);
}

TEST_CASE("k-means is deterministic for a seed") {
  const auto p = testing::random_points(80, 2, 9);
  const auto cfg = ClusteringConfig::defaults(Algorithm::KMeans, 4, 33);
  const auto a = kmeans(p, cfg), b = kmeans(p, cfg);
  CHECK(a.labels.assignments()[0] == b.labels.assignments()[0]);
  CHECK(std::equal(a.labels.assignments().begin(), a.labels.assignments().end(), b.labels.assignments().begin()));
  CHECK(a.inertia == b.inertia);
}

TEST_CASE("k-means inertia matches the labels") {
  const auto p = testing::random_points(60, 3, 2);
  const auto r = kmeans(p, ClusteringConfig::defaults(Algorithm::KMeans, 5, 2));
  double w = 0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) w += std::pow(p(i, j) - r.centers(r.labels[i], j), 2);
  CHECK(r.inertia == doctest::Approx(w).epsilon(1e-10));
}

TEST_CASE("ward on two far pairs") {
  const PointMatrix p(4, 2, {0, 0, 0, 1, 50, 50, 50, 51});
  const auto l = ward_linkage(p, 2);
  CHECK(adjusted_rand_index(Labeling({0, 0, 1, 1}, 2), l) == 1.0);
  CHECK(l[0] == 0);
}

TEST_CASE("ward with k = N gives singletons") {
  const auto p = testing::random_points(7, 2, 3);
  const auto l = ward_linkage(p, 7);
  CHECK(l.k() == 7);
  for (std::size_t s : l.cluster_sizes()) CHECK(s == 1);
}

TEST_CASE("ward recovers three blobs") {
  const auto [p, truth] = testing::blobs({{0, 0}, {8, 0}, {4, 7}}, 14, 1.0, 5);
  CHECK(adjusted_rand_index(truth, ward_linkage(p, 3)) >= 0.9);
}

TEST_CASE("ward merge heights follow the Ward criterion") {
  // 1-D points 0, 1, 10: first merge {0,1}; k = 2 keeps 10 alone.
  const auto l = ward_linkage(PointMatrix(3, 1, {0, 1, 10}), 2);
  CHECK(l[0] == l[1]);
  CHECK(l[2] != l[0]);
}

TEST_CASE("gmm separates two blobs") {
  const auto [p, truth] = testing::blobs({{0, 0}, {30, 30}}, 60, 1.0, 6);
  const auto r = gmm_em(p, ClusteringConfig::defaults(Algorithm::GmmEm, 2, 3));
  CHECK(adjusted_rand_index(truth, r.labels) == 1.0);
  CHECK(std::isfinite(r.log_likelihood));
}

TEST_CASE("gmm log-likelihood trace never decreases") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [p, truth] = testing::blobs({{0, 0}, {3, 1}, {1, 4}}, 40, 1.0, 50 + seed);
    auto cfg = ClusteringConfig::defaults(Algorithm::GmmEm, 3, seed);
    cfg.n_init = 1;
    const auto r = gmm_em(p, cfg);
    REQUIRE(r.log_likelihood_trace.size() >= 2);
    for (std::size_t i = 1; i < r.log_likelihood_trace.size(); ++i)
      CHECK(r.log_likelihood_trace[i] >= r.log_likelihood_trace[i - 1] - 1e-9);
  }
}

TEST_CASE("invalid k") {
  const auto p = testing::random_points(5, 2, 1);
  for (Algorithm a : {Algorithm::KMeans, Algorithm::Ward, Algorithm::GmmEm}) {
    CAPTURE(to_string(a));
    CHECK(kind_of([&] { cluster(p, ClusteringConfig::defaults(a, 1, 0)); }) == ErrorKind::InvalidK);
    CHECK(kind_of([&] { cluster(p, ClusteringConfig::defaults(a, 6, 0)); }) == ErrorKind::InvalidK);
  }
}

TEST_CASE("labelings never contain empty clusters") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = testing::random_points(40, 2, seed);
    for (Algorithm a : {Algorithm::KMeans, Algorithm::Ward, Algorithm::GmmEm}) {
      const auto l = cluster(p, ClusteringConfig::defaults(a, 4, seed));
      CHECK(l.size() == 40);
      CHECK(no_empty_cluster(l));
      CHECK(l.k() <= 4);
    }
  }
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("KMeans") == Algorithm::KMeans);
  CHECK(parse_algorithm("em") == Algorithm::GmmEm);
  CHECK(to_string(Algorithm::Ward) == "ward");
  CHECK_THROWS_AS(parse_algorithm("birch"), Error);
}

}  // TEST_SUITE
