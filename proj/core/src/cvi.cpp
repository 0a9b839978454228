#include "cvikit/cvi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvikit/error.hpp"

namespace cvikit {
namespace {

void check_partition(std::size_t n, const Labeling& labels, const char* index) {
  if (labels.size() != n) {
    throw Error(ErrorKind::InvalidInput, std::string(index) + ": label count does not match point count");
  }
  if (labels.k() < 2) {
    throw Error(ErrorKind::InvalidPartition, std::string(index) + " needs at least 2 clusters");
  }
  if (n <= labels.k()) {
    throw Error(ErrorKind::InvalidPartition, std::string(index) + " needs more points than clusters");
  }
}

[[noreturn]] void divide_degenerate(const char* index, const char* what) {
  throw Error(ErrorKind::DivideDegenerate, std::string(index) + ": " + what + " is zero");
}

struct Scatter {
  double within = 0.0;   // W
  double between = 0.0;  // B
};

Scatter scatter(const PointMatrix& points, const Labeling& labels, const PointMatrix& centers) {
  const std::size_t d = points.cols();
  std::vector<double> global(d, 0.0);
  for (std::size_t i = 0; i < points.rows(); ++i)
    for (std::size_t j = 0; j < d; ++j) global[j] += points(i, j);
  for (double& g : global) g /= static_cast<double>(points.rows());

  Scatter s;
  for (std::size_t i = 0; i < points.rows(); ++i) s.within += squared_euclidean(points.row(i), centers.row(labels[i]));
  const auto sizes = labels.cluster_sizes();
  for (std::size_t c = 0; c < labels.k(); ++c)
    s.between += static_cast<double>(sizes[c]) * squared_euclidean(centers.row(c), global);
  return s;
}

}  // namespace

PointMatrix centroids(const PointMatrix& points, const Labeling& labels) {
  const std::size_t d = points.cols();
  std::vector<double> sums(labels.k() * d, 0.0);
  const auto sizes = labels.cluster_sizes();
  for (std::size_t i = 0; i < points.rows(); ++i)
    for (std::size_t j = 0; j < d; ++j) sums[labels[i] * d + j] += points(i, j);
  for (std::size_t c = 0; c < labels.k(); ++c)
    for (std::size_t j = 0; j < d; ++j) sums[c * d + j] /= static_cast<double>(sizes[c]);
  return PointMatrix(labels.k(), d, std::move(sums));
}

CviResult dunn(const CondensedDistances& dist, const Labeling& labels) {
  check_partition(dist.points(), labels, "Dunn");
  double min_inter = std::numeric_limits<double>::infinity();
  double max_intra = 0.0;
  const std::size_t n = dist.points();
  const auto values = dist.values();
  std::size_t p = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      if (labels[i] == labels[j]) {
        max_intra = std::max(max_intra, values[p]);
      } else {
        min_inter = std::min(min_inter, values[p]);
      }
    }
  }
  if (max_intra == 0.0) divide_degenerate("Dunn", "maximum cluster diameter");
  return {"Dunn", min_inter / max_intra, Direction::Max};
}

CviResult dunn(const PointMatrix& points, const Labeling& labels) {
  check_partition(points.rows(), labels, "Dunn");
  return dunn(pairwise_distances(points), labels);
}

CviResult calinski_harabasz(const PointMatrix& points, const Labeling& labels) {
  check_partition(points.rows(), labels, "CH");
  const auto s = scatter(points, labels, centroids(points, labels));
  if (s.within == 0.0) divide_degenerate("CH", "within-cluster scatter");
  const double k = static_cast<double>(labels.k());
  const double n = static_cast<double>(points.rows());
  return {"CH", (s.between / (k - 1.0)) / (s.within / (n - k)), Direction::Max};
}

CviResult wb_index(const PointMatrix& points, const Labeling& labels) {
  check_partition(points.rows(), labels, "WB");
  const auto s = scatter(points, labels, centroids(points, labels));
  if (s.between == 0.0) divide_degenerate("WB", "between-cluster scatter");
  return {"WB", static_cast<double>(labels.k()) * s.within / s.between, Direction::Min};
}

CviResult davies_bouldin(const PointMatrix& points, const Labeling& labels) {
  check_partition(points.rows(), labels, "DB");
  const std::size_t k = labels.k();
  const auto centers = centroids(points, labels);
  const auto sizes = labels.cluster_sizes();
  std::vector<double> spread(k, 0.0);
  for (std::size_t i = 0; i < points.rows(); ++i) spread[labels[i]] += euclidean(points.row(i), centers.row(labels[i]));
  for (std::size_t c = 0; c < k; ++c) spread[c] /= static_cast<double>(sizes[c]);

  double total = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    double worst = 0.0;
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const double sep = euclidean(centers.row(a), centers.row(b));
      if (sep == 0.0) divide_degenerate("DB", "centroid separation");
      worst = std::max(worst, (spread[a] + spread[b]) / sep);
    }
    total += worst;
  }
  return {"DB", total / static_cast<double>(k), Direction::Min};
}

CviResult silhouette(const CondensedDistances& dist, const Labeling& labels) {
  const std::size_t n = dist.points();
  check_partition(n, labels, "Silhouette");
  const std::size_t k = labels.k();
  const auto sizes = labels.cluster_sizes();
  std::vector<double> sums(k);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t own = labels[i];
    if (sizes[own] < 2) continue;  // singleton clusters contribute 0
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sums[labels[j]] += dist(i, j);
    const double a = sums[own] / static_cast<double>(sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c)
      if (c != own) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return {"Silhouette", total / static_cast<double>(n), Direction::Max};
}

CviResult silhouette(const PointMatrix& points, const Labeling& labels) {
  check_partition(points.rows(), labels, "Silhouette");
  return silhouette(pairwise_distances(points), labels);
}

CviResult i_index(const PointMatrix& points, const Labeling& labels, double p) {
  check_partition(points.rows(), labels, "I");
  const std::size_t k = labels.k();
  const auto centers = centroids(points, labels);
  std::vector<double> global(points.cols(), 0.0);
  for (std::size_t i = 0; i < points.rows(); ++i)
    for (std::size_t j = 0; j < points.cols(); ++j) global[j] += points(i, j);
  for (double& g : global) g /= static_cast<double>(points.rows());

  double e1 = 0.0;
  double ek = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    e1 += euclidean(points.row(i), global);
    ek += euclidean(points.row(i), centers.row(labels[i]));
  }
  if (ek == 0.0) divide_degenerate("I", "within-cluster distance sum");
  double dk = 0.0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) dk = std::max(dk, euclidean(centers.row(a), centers.row(b)));
  const double base = (1.0 / static_cast<double>(k)) * (e1 / ek) * dk;
  return {"I", std::pow(base, p), Direction::Max};
}

}  // namespace cvikit
