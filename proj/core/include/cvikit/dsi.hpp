#pragma once

// Distance-based Separability Index.
//
// For every class i the within-class distance set ICD_i is compared with
// the set of distances from class i to all other points (BCD_i) using the
// two-sample KS distance s_i. DSI is the unweighted mean of the s_i. When
// the classes share one distribution the two sets are identically
// distributed and DSI tends to 0; perfectly separated classes give 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvikit/dataset.hpp"
#include "cvikit/pairwise.hpp"

namespace cvikit {

struct DsiOptions {
  /// Evaluate on a seeded uniform subsample of at most this many points.
  std::optional<std::size_t> subsample_cap;
  std::uint64_t seed = 0;
};

struct DsiScore {
  double value = 0.0;
  /// Class ids that contributed, parallel to `per_class`.
  std::vector<std::size_t> evaluated_classes;
  std::vector<double> per_class;
  /// Classes with fewer than two members (or no complement) left out of the mean.
  std::vector<std::size_t> skipped_classes;
};

/// Throws invalid-partition for k < 2 and no-computable-class when every
/// class is degenerate.
DsiScore dsi(const PointMatrix& points, const Labeling& labels, const DsiOptions& options = {});

/// Same computation over precomputed distances and raw ids in 0..k-1.
DsiScore dsi(const CondensedDistances& dist, std::span<const std::size_t> assignments,
             std::size_t k);

}  // namespace cvikit
