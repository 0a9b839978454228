#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cvikit/dataset.hpp"

namespace cvikit {

/// Sorted multiset of non-negative distances (an ICD or BCD set).
class DistanceMultiset {
 public:
  DistanceMultiset() = default;

  /// Sorts the values; throws invalid-value on negative or non-finite input.
  static DistanceMultiset from_unsorted(std::vector<double> values);
  /// Empty set for a class too small to have within-class pairs.
  static DistanceMultiset degenerate();

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool is_degenerate() const noexcept { return degenerate_; }

 private:
  std::vector<double> values_;
  bool degenerate_ = false;
};

/// Upper-triangle Euclidean distances, row-major over pairs (i, j), i < j.
class CondensedDistances {
 public:
  CondensedDistances() = default;
  CondensedDistances(std::size_t n, std::vector<double> values);

  std::size_t points() const noexcept { return n_; }
  std::span<const double> values() const noexcept { return values_; }

  static std::size_t index(std::size_t n, std::size_t i, std::size_t j) noexcept {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
  /// Distance between i and j, in either order; 0 when i == j.
  double operator()(std::size_t i, std::size_t j) const noexcept {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return values_[index(n_, i, j)];
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

double euclidean(std::span<const double> a, std::span<const double> b) noexcept;
double squared_euclidean(std::span<const double> a, std::span<const double> b) noexcept;

/// Throws too-small when fewer than two points are given.
CondensedDistances pairwise_distances(const PointMatrix& points);

/// All within-class distances of `class_id`; degenerate when it has < 2 members.
DistanceMultiset icd_set(const CondensedDistances& dist, std::span<const std::size_t> assignments,
                         std::size_t class_id);
DistanceMultiset icd_set(const PointMatrix& points, const Labeling& labels, std::size_t class_id);

/// Distances between members of `class_id` and every point outside it.
/// Throws degenerate-partition when either side is empty.
DistanceMultiset bcd_set(const CondensedDistances& dist, std::span<const std::size_t> assignments,
                         std::size_t class_id);
DistanceMultiset bcd_set(const PointMatrix& points, const Labeling& labels, std::size_t class_id);

/// Sorted uniform sample of min(n, cap) indices out of 0..n-1.
std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t cap, std::uint64_t seed);

}  // namespace cvikit
