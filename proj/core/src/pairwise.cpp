#include "cvikit/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cvikit/error.hpp"

namespace cvikit {

DistanceMultiset DistanceMultiset::from_unsorted(std::vector<double> values) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidValue, "distances must be finite and non-negative");
    }
  }
  std::sort(values.begin(), values.end());
  DistanceMultiset out;
  out.values_ = std::move(values);
  return out;
}

DistanceMultiset DistanceMultiset::degenerate() {
  DistanceMultiset out;
  out.degenerate_ = true;
  return out;
}

CondensedDistances::CondensedDistances(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * (n_ - 1) / 2) {
    throw Error(ErrorKind::InvalidInput, "condensed distance vector has the wrong length");
  }
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double diff = a[m] - b[m];
    sum += diff * diff;
  }
  return sum;
}

double euclidean(std::span<const double> a, std::span<const double> b) noexcept {
  return std::sqrt(squared_euclidean(a, b));
}

CondensedDistances pairwise_distances(const PointMatrix& points) {
  const std::size_t n = points.rows();
  if (n < 2) throw Error(ErrorKind::TooSmall, "pairwise distances need at least 2 points");
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto xi = points.row(i);
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(euclidean(xi, points.row(j)));
  }
  return CondensedDistances(n, std::move(values));
}

namespace {

std::vector<std::size_t> members_of(std::span<const std::size_t> assignments, std::size_t class_id) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < assignments.size(); ++i)
    if (assignments[i] == class_id) idx.push_back(i);
  return idx;
}

}  // namespace

DistanceMultiset icd_set(const CondensedDistances& dist, std::span<const std::size_t> assignments,
                         std::size_t class_id) {
  const auto idx = members_of(assignments, class_id);
  if (idx.size() < 2) return DistanceMultiset::degenerate();
  std::vector<double> values;
  values.reserve(idx.size() * (idx.size() - 1) / 2);
  for (std::size_t a = 0; a + 1 < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) values.push_back(dist(idx[a], idx[b]));
  return DistanceMultiset::from_unsorted(std::move(values));
}

DistanceMultiset bcd_set(const CondensedDistances& dist, std::span<const std::size_t> assignments,
                         std::size_t class_id) {
  const std::size_t n = assignments.size();
  const auto idx = members_of(assignments, class_id);
  if (idx.empty() || idx.size() == n) {
    throw Error(ErrorKind::DegeneratePartition,
                "class " + std::to_string(class_id) + " or its complement is empty");
  }
  std::vector<double> values;
  values.reserve(idx.size() * (n - idx.size()));
  for (std::size_t i : idx)
    for (std::size_t j = 0; j < n; ++j)
      if (assignments[j] != class_id) values.push_back(dist(i, j));
  return DistanceMultiset::from_unsorted(std::move(values));
}

DistanceMultiset icd_set(const PointMatrix& points, const Labeling& labels, std::size_t class_id) {
  if (class_id >= labels.k()) throw Error(ErrorKind::InvalidInput, "class id out of range");
  const auto idx = members_of(labels.assignments(), class_id);
  if (idx.size() < 2) return DistanceMultiset::degenerate();
  std::vector<double> values;
  values.reserve(idx.size() * (idx.size() - 1) / 2);
  for (std::size_t a = 0; a + 1 < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      values.push_back(euclidean(points.row(idx[a]), points.row(idx[b])));
  return DistanceMultiset::from_unsorted(std::move(values));
}

DistanceMultiset bcd_set(const PointMatrix& points, const Labeling& labels, std::size_t class_id) {
  if (class_id >= labels.k()) throw Error(ErrorKind::InvalidInput, "class id out of range");
  const std::size_t n = labels.size();
  const auto idx = members_of(labels.assignments(), class_id);
  if (idx.empty() || idx.size() == n) {
    throw Error(ErrorKind::DegeneratePartition,
                "class " + std::to_string(class_id) + " or its complement is empty");
  }
  std::vector<double> values;
  values.reserve(idx.size() * (n - idx.size()));
  for (std::size_t i : idx)
    for (std::size_t j = 0; j < n; ++j)
      if (labels[j] != class_id) values.push_back(euclidean(points.row(i), points.row(j)));
  return DistanceMultiset::from_unsorted(std::move(values));
}

std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t cap, std::uint64_t seed) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (cap >= n) return all;
  std::vector<std::size_t> picked;
  picked.reserve(cap);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), cap, rng);
  return picked;
}

}  // namespace cvikit
