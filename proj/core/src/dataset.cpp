#include "cvikit/dataset.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "cvikit/error.hpp"

namespace cvikit {

PointMatrix::PointMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw Error(ErrorKind::InvalidInput, "point matrix has " + std::to_string(values_.size()) +
                                             " values, expected " +
                                             std::to_string(rows_ * cols_));
  }
}

PointMatrix PointMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * cols_);
  for (std::size_t i : indices) {
    auto r = row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return PointMatrix(indices.size(), cols_, std::move(out));
}

Labeling::Labeling(std::vector<std::size_t> assignments, std::size_t k)
    : assignments_(std::move(assignments)), k_(k) {
  std::vector<bool> seen(k_, false);
  for (std::size_t id : assignments_) {
    if (id >= k_) {
      throw Error(ErrorKind::InvalidInput,
                  "cluster id " + std::to_string(id) + " out of range for k=" + std::to_string(k_));
    }
    seen[id] = true;
  }
  for (std::size_t c = 0; c < k_; ++c) {
    if (!seen[c]) {
      throw Error(ErrorKind::DegeneratePartition, "cluster " + std::to_string(c) + " is empty");
    }
  }
}

namespace {

template <typename Id>
Labeling dense_remap(std::span<const Id> ids) {
  std::unordered_map<Id, std::size_t> dense;
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (Id id : ids) {
    auto [it, inserted] = dense.try_emplace(id, dense.size());
    out.push_back(it->second);
  }
  return Labeling(std::move(out), dense.size());
}

}  // namespace

Labeling Labeling::from_raw(std::span<const long long> ids) { return dense_remap(ids); }
Labeling Labeling::from_raw(std::span<const std::size_t> ids) { return dense_remap(ids); }

std::vector<std::size_t> Labeling::cluster_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (std::size_t id : assignments_) ++sizes[id];
  return sizes;
}

std::vector<std::vector<std::size_t>> Labeling::members() const {
  std::vector<std::vector<std::size_t>> out(k_);
  for (std::size_t i = 0; i < assignments_.size(); ++i) out[assignments_[i]].push_back(i);
  return out;
}

void Dataset::validate() const {
  if (points.rows() < 2) {
    throw Error(ErrorKind::TooSmall, "dataset '" + name + "' needs at least 2 points");
  }
  if (points.cols() < 1) {
    throw Error(ErrorKind::MalformedFile, "dataset '" + name + "' has no feature columns");
  }
  for (double v : points.values()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidValue, "dataset '" + name + "' has a non-finite feature");
    }
  }
  if (true_labels) {
    if (true_labels->size() != points.rows()) {
      throw Error(ErrorKind::InvalidInput, "label count does not match point count");
    }
    if (!class_names.empty() && class_names.size() != true_labels->k()) {
      throw Error(ErrorKind::InvalidInput, "class name count does not match class count");
    }
  }
}

PointMatrix standardize(const PointMatrix& points) {
  const std::size_t n = points.rows();
  const std::size_t d = points.cols();
  std::vector<double> mean(d, 0.0);
  std::vector<double> sd(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) mean[j] += points(i, j);
  for (double& m : mean) m /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = points(i, j) - mean[j];
      sd[j] += diff * diff;
    }
  for (double& s : sd) s = std::sqrt(s / static_cast<double>(n));

  std::vector<double> out(n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double centred = points(i, j) - mean[j];
      out[i * d + j] = sd[j] > 0.0 ? centred / sd[j] : centred;
    }
  return PointMatrix(n, d, std::move(out));
}

}  // namespace cvikit
