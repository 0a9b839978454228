#pragma once

// Seeded generators and brute-force oracles shared by the test suites.
// Oracles deliberately avoid the library's code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cvikit/dataset.hpp"

namespace cvikit::testing {

inline PointMatrix random_points(std::size_t n, std::size_t d, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> v(n * d);
  for (double& x : v) x = g(rng);
  return PointMatrix(n, d, std::move(v));
}

/// Balanced random labels: every cluster gets at least one point.
inline Labeling random_labels(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i % k;
  std::shuffle(ids.begin(), ids.end(), rng);
  return Labeling(std::move(ids), k);
}

/// Gaussian blobs with the given centres (rows), `per` points each.
inline std::pair<PointMatrix, Labeling> blobs(const std::vector<std::vector<double>>& centres,
                                              std::size_t per, double sd, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sd);
  const std::size_t d = centres.front().size();
  std::vector<double> v;
  std::vector<std::size_t> ids;
  for (std::size_t c = 0; c < centres.size(); ++c)
    for (std::size_t p = 0; p < per; ++p) {
      for (std::size_t j = 0; j < d; ++j) v.push_back(centres[c][j] + g(rng));
      ids.push_back(c);
    }
  const std::size_t n = ids.size();
  return {PointMatrix(n, d, std::move(v)), Labeling(std::move(ids), centres.size())};
}

inline double oracle_distance(const PointMatrix& p, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t m = 0; m < p.cols(); ++m) s += (p(i, m) - p(j, m)) * (p(i, m) - p(j, m));
  return std::sqrt(s);
}

/// ECDF evaluated at every element of the union: max |F_a(x) - F_b(x)|.
inline double oracle_ks(const std::vector<double>& a, const std::vector<double>& b) {
  auto cdf = [](const std::vector<double>& s, double x) {
    std::size_t count = 0;
    for (double v : s)
      if (v <= x) ++count;
    return static_cast<double>(count) / static_cast<double>(s.size());
  };
  double best = 0.0;
  for (const auto* set : {&a, &b})
    for (double x : *set) best = std::max(best, std::abs(cdf(a, x) - cdf(b, x)));
  return best;
}

/// ARI by counting agreements over all unordered point pairs.
inline double oracle_ari_pairs(const std::vector<std::size_t>& u, const std::vector<std::size_t>& v) {
  const std::size_t n = u.size();
  double both = 0, only_u = 0, only_v = 0, neither = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool su = u[i] == u[j];
      const bool sv = v[i] == v[j];
      if (su && sv) ++both;
      else if (su) ++only_u;
      else if (sv) ++only_v;
      else ++neither;
    }
  const double total = both + only_u + only_v + neither;
  const double pairs_u = both + only_u;
  const double pairs_v = both + only_v;
  const double expected = pairs_u * pairs_v / total;
  const double maximum = 0.5 * (pairs_u + pairs_v);
  if (maximum == expected) return 1.0;
  return (both - expected) / (maximum - expected);
}

}  // namespace cvikit::testing
