#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvikit/clustering.hpp"
#include "cvikit/dataset.hpp"
#include "cvikit/scores.hpp"
#include "cvikit/validity.hpp"

namespace cvikit {

struct KPrediction {
  std::string cvi_name;
  Algorithm algorithm = Algorithm::KMeans;
  std::vector<std::size_t> k_values;           // ascending, unique
  std::vector<std::optional<double>> scores;   // nullopt where the index was undefined
  std::size_t k_hat = 0;
  std::optional<bool> success;
  std::vector<std::string> warnings;
};

/// Picks the optimal k among defined scores, ties toward the smaller k.
/// Throws no-computable-k if no score is defined.
std::size_t select_k(std::span<const std::size_t> k_values,
                     std::span<const std::optional<double>> scores, Direction direction);

/// Clusters at each k and scores the labeling with `cvi`.
KPrediction predict_k(const PointMatrix& points, const ClusteringConfig& base, Cvi cvi,
                      std::span<const std::size_t> k_values,
                      std::optional<std::size_t> true_c = std::nullopt,
                      const CviOptions& options = {});

/// One clustering per k shared by every index; result parallel to `cvis`.
std::vector<KPrediction> predict_k_all(const PointMatrix& points, const ClusteringConfig& base,
                                       std::span<const Cvi> cvis,
                                       std::span<const std::size_t> k_values,
                                       std::optional<std::size_t> true_c = std::nullopt,
                                       const CviOptions& options = {});

/// Parses "2..6" or "2,3,5".
std::vector<std::size_t> parse_k_range(std::string_view text);

}  // namespace cvikit
