#include "cvikit/ari.hpp"

#include <cstdint>
#include <vector>

#include "cvikit/error.hpp"

namespace cvikit {
namespace {

std::uint64_t pairs(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

double adjusted_rand_index(const Labeling& truth, const Labeling& predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorKind::InvalidInput, "ARI: labelings have different lengths");
  }
  const std::size_t n = truth.size();
  if (n < 2) throw Error(ErrorKind::InvalidInput, "ARI needs at least 2 points");

  const std::size_t rows = truth.k();
  const std::size_t cols = predicted.k();
  std::vector<std::uint64_t> table(rows * cols, 0);
  for (std::size_t i = 0; i < n; ++i) ++table[truth[i] * cols + predicted[i]];

  std::uint64_t sum_cells = 0;
  for (auto count : table) sum_cells += pairs(count);
  std::uint64_t sum_rows = 0;
  for (auto a : truth.cluster_sizes()) sum_rows += pairs(a);
  std::uint64_t sum_cols = 0;
  for (auto b : predicted.cluster_sizes()) sum_cols += pairs(b);

  const double total = static_cast<double>(pairs(n));
  const double expected = static_cast<double>(sum_rows) * static_cast<double>(sum_cols) / total;
  const double max_index = 0.5 * (static_cast<double>(sum_rows) + static_cast<double>(sum_cols));
  // max_index == expected only when both partitions are all singletons or
  // both are one cluster, i.e. they are identical.
  if (max_index == expected) return 1.0;
  return (static_cast<double>(sum_cells) - expected) / (max_index - expected);
}

}  // namespace cvikit
