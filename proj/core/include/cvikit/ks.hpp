#pragma once

#include <span>

#include "cvikit/pairwise.hpp"

namespace cvikit {

struct KsStatistic {
  double value = 0.0;
};

/// Exact two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
/// Both inputs must be sorted ascending; sizes may differ.
/// Throws empty-sample if either is empty.
KsStatistic ks_two_sample(std::span<const double> a, std::span<const double> b);
KsStatistic ks_two_sample(const DistanceMultiset& a, const DistanceMultiset& b);

}  // namespace cvikit
