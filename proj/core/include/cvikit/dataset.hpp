#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cvikit {

/// Dense row-major N x d matrix of features.
class PointMatrix {
 public:
  PointMatrix() = default;
  PointMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * cols_, cols_};
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[i * cols_ + j];
  }
  std::span<const double> values() const noexcept { return values_; }

  /// Rows at the given indices, in that order.
  PointMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const PointMatrix&, const PointMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Cluster assignment with ids in 0..k-1, every id used at least once.
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::vector<std::size_t> assignments, std::size_t k);

  /// Remaps arbitrary ids to 0..k-1 in order of first appearance.
  static Labeling from_raw(std::span<const long long> ids);
  static Labeling from_raw(std::span<const std::size_t> ids);

  std::size_t size() const noexcept { return assignments_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t operator[](std::size_t i) const noexcept { return assignments_[i]; }
  std::span<const std::size_t> assignments() const noexcept { return assignments_; }

  std::vector<std::size_t> cluster_sizes() const;
  /// Point indices grouped by cluster id.
  std::vector<std::vector<std::size_t>> members() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::size_t> assignments_;
  std::size_t k_ = 0;
};

struct Dataset {
  std::string name;
  PointMatrix points;
  std::optional<Labeling> true_labels;
  /// Original label symbol for each dense class id.
  std::vector<std::string> class_names;

  std::size_t size() const noexcept { return points.rows(); }
  std::size_t dims() const noexcept { return points.cols(); }

  /// Throws if any dataset invariant is violated.
  void validate() const;
};

/// Z-scores every feature column; constant columns are centred only.
PointMatrix standardize(const PointMatrix& points);

}  // namespace cvikit
