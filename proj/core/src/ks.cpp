#include "cvikit/ks.hpp"

#include <cstdint>
#include <cstdlib>

#include "cvikit/error.hpp"

namespace cvikit {

KsStatistic ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySample, "KS needs two non-empty samples");
  const std::uint64_t na = a.size();
  const std::uint64_t nb = b.size();
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  // |F_a - F_b| = |i*nb - j*na| / (na*nb); kept integral so ks(a,b) == ks(b,a).
  std::uint64_t best = 0;
  while (i < na && j < nb) {
    const double x = a[i] < b[j] ? a[i] : b[j];
    while (i < na && a[i] <= x) ++i;
    while (j < nb && b[j] <= x) ++j;
    const std::uint64_t lhs = i * nb;
    const std::uint64_t rhs = j * na;
    const std::uint64_t gap = lhs > rhs ? lhs - rhs : rhs - lhs;
    if (gap > best) best = gap;
  }
  return {static_cast<double>(best) / (static_cast<double>(na) * static_cast<double>(nb))};
}

KsStatistic ks_two_sample(const DistanceMultiset& a, const DistanceMultiset& b) {
  return ks_two_sample(a.values(), b.values());
}

}  // namespace cvikit
