#include "cvikit/dsi.hpp"

#include <numeric>

#include "cvikit/error.hpp"
#include "cvikit/ks.hpp"

namespace cvikit {

DsiScore dsi(const CondensedDistances& dist, std::span<const std::size_t> assignments,
             std::size_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidPartition, "DSI needs at least 2 classes");
  if (assignments.size() != dist.points()) {
    throw Error(ErrorKind::InvalidInput, "label count does not match point count");
  }
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t id : assignments) {
    if (id >= k) throw Error(ErrorKind::InvalidInput, "class id out of range");
    ++sizes[id];
  }

  DsiScore score;
  for (std::size_t c = 0; c < k; ++c) {
    // Needs within-class pairs and at least one outside point.
    if (sizes[c] < 2 || sizes[c] == assignments.size()) {
      score.skipped_classes.push_back(c);
      continue;
    }
    const auto icd = icd_set(dist, assignments, c);
    const auto bcd = bcd_set(dist, assignments, c);
    score.evaluated_classes.push_back(c);
    score.per_class.push_back(ks_two_sample(icd, bcd).value);
  }
  if (score.per_class.empty()) {
    throw Error(ErrorKind::NoComputableClass, "no class has at least 2 members");
  }
  score.value = std::accumulate(score.per_class.begin(), score.per_class.end(), 0.0) /
                static_cast<double>(score.per_class.size());
  return score;
}

DsiScore dsi(const PointMatrix& points, const Labeling& labels, const DsiOptions& options) {
  if (labels.k() < 2) throw Error(ErrorKind::InvalidPartition, "DSI needs at least 2 classes");
  if (labels.size() != points.rows()) {
    throw Error(ErrorKind::InvalidInput, "label count does not match point count");
  }
  if (options.subsample_cap && *options.subsample_cap < points.rows()) {
    const auto idx = subsample_indices(points.rows(), *options.subsample_cap, options.seed);
    std::vector<std::size_t> ids;
    ids.reserve(idx.size());
    for (std::size_t i : idx) ids.push_back(labels[i]);
    return dsi(pairwise_distances(points.select_rows(idx)), ids, labels.k());
  }
  return dsi(pairwise_distances(points), labels.assignments(), labels.k());
}

}  // namespace cvikit
