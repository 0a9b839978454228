#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cvikit/dataset.hpp"
#include "cvikit/scores.hpp"

namespace cvikit {

/// Internal validity indices computable from points and a labeling.
enum class Cvi { Dunn, CalinskiHarabasz, DaviesBouldin, Silhouette, WB, I, Dsi };

/// Canonical column names: Dunn, CH, DB, Silhouette, WB, I, DSI.
std::string_view cvi_name(Cvi cvi) noexcept;
Direction cvi_direction(Cvi cvi) noexcept;
/// Case-insensitive; also accepts "sil", "calinski_harabasz", "davies_bouldin".
Cvi parse_cvi(std::string_view name);
std::vector<Cvi> all_cvis();
/// Comma-separated list, or "all".
std::vector<Cvi> parse_cvi_list(std::string_view list);

struct CviOptions {
  double i_index_power = 2.0;
  /// Seeded point subsample for the pair-based indices (Dunn, Silhouette, DSI).
  std::optional<std::size_t> subsample_cap;
  std::uint64_t seed = 0;
};

double compute_cvi(Cvi cvi, const PointMatrix& points, const Labeling& labels,
                   const CviOptions& options = {});

}  // namespace cvikit
