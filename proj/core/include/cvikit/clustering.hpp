#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cvikit/dataset.hpp"

namespace cvikit {

enum class Algorithm { KMeans, Ward, GmmEm };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts kmeans, ward, gmm/em (case-insensitive); throws invalid-input.
Algorithm parse_algorithm(std::string_view name);

struct ClusteringConfig {
  Algorithm algorithm = Algorithm::KMeans;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t n_init = 10;
  std::size_t max_iter = 300;
  double tol = 1e-4;

  /// Library defaults: 10 restarts, 300 iterations for k-means and 100 for EM.
  static ClusteringConfig defaults(Algorithm algorithm, std::size_t k, std::uint64_t seed = 0);
  void validate() const;
};

struct KMeansResult {
  Labeling labels;
  PointMatrix centers;
  double inertia = 0.0;  // within-cluster sum of squares
  std::size_t iterations = 0;
};

/// Lloyd iterations from k-means++ seeding, best of n_init by inertia.
KMeansResult kmeans(const PointMatrix& points, const ClusteringConfig& cfg);

/// Agglomerative Ward clustering cut at k clusters.
Labeling ward_linkage(const PointMatrix& points, std::size_t k);

struct GmmResult {
  Labeling labels;
  double log_likelihood = 0.0;  // mean per point
  std::vector<double> log_likelihood_trace;
  std::size_t iterations = 0;
};

/// Full-covariance Gaussian mixture fitted by EM; best of n_init by final
/// log-likelihood. Labels are the argmax responsibilities, so a component
/// that wins no point yields fewer than k clusters.
GmmResult gmm_em(const PointMatrix& points, const ClusteringConfig& cfg);

/// Dispatches on cfg.algorithm.
Labeling cluster(const PointMatrix& points, const ClusteringConfig& cfg);

}  // namespace cvikit
