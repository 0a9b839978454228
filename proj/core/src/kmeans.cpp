#include <algorithm>
#include <limits>
#include <optional>
#include <random>

#include "cvikit/clustering.hpp"
#include "cvikit/error.hpp"
#include "cvikit/pairwise.hpp"
#include "random.hpp"

namespace cvikit {
namespace {

double mean_feature_variance(const PointMatrix& points) {
  const std::size_t n = points.rows();
  const std::size_t d = points.cols();
  double total = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += points(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (points(i, j) - mean) * (points(i, j) - mean);
    total += var / static_cast<double>(n);
  }
  return total / static_cast<double>(d);
}

class Lloyd {
 public:
  Lloyd(const PointMatrix& points, std::size_t k)
      : points_(points), k_(k), d_(points.cols()), centers_(k * d_), labels_(points.rows()),
        nearest_(points.rows()) {}

  void seed_plus_plus(std::mt19937_64& rng) {
    const std::size_t n = points_.rows();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    set_center(0, pick(rng));
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_euclidean(points_.row(i), center(0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t c = 1; c < k_; ++c) {
      double total = 0.0;
      for (double v : d2) total += v;
      std::size_t chosen = 0;
      if (total > 0.0) {
        const double target = unit(rng) * total;
        double acc = 0.0;
        chosen = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
          acc += d2[i];
          if (acc > target && d2[i] > 0.0) {
            chosen = i;
            break;
          }
        }
      } else {
        chosen = pick(rng);
      }
      set_center(c, chosen);
      for (std::size_t i = 0; i < n; ++i)
        d2[i] = std::min(d2[i], squared_euclidean(points_.row(i), center(c)));
    }
  }

  // Returns iterations run.
  std::size_t run(std::size_t max_iter, double shift_tol) {
    std::size_t iter = 0;
    while (iter < max_iter) {
      ++iter;
      assign();
      repair_empty();
      if (update_centers() <= shift_tol) break;
    }
    return iter;
  }

  double inertia() const {
    double total = 0.0;
    for (std::size_t i = 0; i < points_.rows(); ++i)
      total += squared_euclidean(points_.row(i), center(labels_[i]));
    return total;
  }

  const std::vector<std::size_t>& labels() const { return labels_; }
  const std::vector<double>& centers() const { return centers_; }

 private:
  std::span<const double> center(std::size_t c) const { return {centers_.data() + c * d_, d_}; }

  void set_center(std::size_t c, std::size_t point) {
    auto row = points_.row(point);
    std::copy(row.begin(), row.end(), centers_.begin() + static_cast<std::ptrdiff_t>(c * d_));
  }

  void assign() {
    for (std::size_t i = 0; i < points_.rows(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t c = 0; c < k_; ++c) {
        const double dist = squared_euclidean(points_.row(i), center(c));
        if (dist < best) {
          best = dist;
          arg = c;
        }
      }
      labels_[i] = arg;
      nearest_[i] = best;
    }
  }

  // Moves the point farthest from its centre into each empty cluster.
  void repair_empty() {
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t id : labels_) ++counts[id];
    for (std::size_t c = 0; c < k_; ++c) {
      if (counts[c] > 0) continue;
      std::size_t far = points_.rows();
      double far_dist = -1.0;
      for (std::size_t i = 0; i < points_.rows(); ++i) {
        if (counts[labels_[i]] > 1 && nearest_[i] > far_dist) {
          far_dist = nearest_[i];
          far = i;
        }
      }
      --counts[labels_[far]];
      labels_[far] = c;
      nearest_[far] = 0.0;
      ++counts[c];
      set_center(c, far);
    }
  }

  // Recomputes means; returns the total squared centre shift.
  double update_centers() {
    std::vector<double> sums(k_ * d_, 0.0);
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t i = 0; i < points_.rows(); ++i) {
      ++counts[labels_[i]];
      auto row = points_.row(i);
      for (std::size_t j = 0; j < d_; ++j) sums[labels_[i] * d_ + j] += row[j];
    }
    double shift = 0.0;
    for (std::size_t c = 0; c < k_; ++c)
      for (std::size_t j = 0; j < d_; ++j) {
        const double mean = sums[c * d_ + j] / static_cast<double>(counts[c]);
        const double diff = mean - centers_[c * d_ + j];
        shift += diff * diff;
        centers_[c * d_ + j] = mean;
      }
    return shift;
  }

  const PointMatrix& points_;
  std::size_t k_;
  std::size_t d_;
  std::vector<double> centers_;
  std::vector<std::size_t> labels_;
  std::vector<double> nearest_;
};

}  // namespace

KMeansResult kmeans(const PointMatrix& points, const ClusteringConfig& cfg) {
  cfg.validate();
  if (points.rows() < cfg.k) {
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(cfg.k) + " exceeds the " +
                                         std::to_string(points.rows()) + " available points");
  }
  const double shift_tol = cfg.tol * mean_feature_variance(points);

  std::optional<KMeansResult> best;
  for (std::size_t restart = 0; restart < cfg.n_init; ++restart) {
    std::mt19937_64 rng(detail::derive_seed(cfg.seed, restart));
    Lloyd lloyd(points, cfg.k);
    lloyd.seed_plus_plus(rng);
    const std::size_t iterations = lloyd.run(cfg.max_iter, shift_tol);
    const double inertia = lloyd.inertia();
    if (!best || inertia < best->inertia) {
      best = KMeansResult{Labeling(lloyd.labels(), cfg.k),
                          PointMatrix(cfg.k, points.cols(), lloyd.centers()), inertia, iterations};
    }
  }
  return std::move(*best);
}

}  // namespace cvikit
