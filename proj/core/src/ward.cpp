#include <algorithm>
#include <limits>
#include <numeric>

#include "cvikit/clustering.hpp"
#include "cvikit/error.hpp"
#include "cvikit/pairwise.hpp"

namespace cvikit {
namespace {

struct Merge {
  std::size_t a;
  std::size_t b;
  double height;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Nearest-neighbour chain over squared Euclidean dissimilarities with the
// Lance-Williams update for Ward:
//   d(k, i+j) = [(n_i+n_k) d(k,i) + (n_j+n_k) d(k,j) - n_k d(i,j)] / (n_i+n_j+n_k).
// A merged cluster keeps the slot of its smaller index. Ward is reducible, so
// the chain yields the same dendrogram as the greedy algorithm.
std::vector<Merge> ward_dendrogram(const PointMatrix& points) {
  const std::size_t n = points.rows();
  std::vector<double> dis(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      dis[CondensedDistances::index(n, i, j)] = squared_euclidean(points.row(i), points.row(j));
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    if (i > j) std::swap(i, j);
    return dis[CondensedDistances::index(n, i, j)];
  };

  std::vector<bool> active(n, true);
  std::vector<double> size(n, 1.0);
  std::vector<std::size_t> chain;
  std::vector<Merge> merges;
  merges.reserve(n - 1);
  std::size_t next_start = 0;

  while (merges.size() + 1 < n) {
    if (chain.empty()) {
      while (!active[next_start]) ++next_start;
      chain.push_back(next_start);
    }
    std::size_t a = 0;
    std::size_t b = 0;
    for (;;) {
      a = chain.back();
      const std::size_t prev = chain.size() >= 2 ? chain[chain.size() - 2] : n;
      double best = std::numeric_limits<double>::infinity();
      b = n;
      if (prev != n) {
        best = at(a, prev);
        b = prev;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!active[x] || x == a) continue;
        const double dx = at(a, x);
        if (dx < best) {  // ties keep prev, else the smallest index
          best = dx;
          b = x;
        }
      }
      if (b == prev) break;
      chain.push_back(b);
    }
    chain.pop_back();
    chain.pop_back();

    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    const double dab = at(a, b);
    merges.push_back({a, b, dab});
    const double na = size[a];
    const double nb = size[b];
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x] || x == a || x == b) continue;
      const double nx = size[x];
      const double updated = ((na + nx) * at(a, x) + (nb + nx) * at(b, x) - nx * dab) / (na + nb + nx);
      at(keep, x) = updated;
    }
    active[drop] = false;
    size[keep] = na + nb;
  }

  std::stable_sort(merges.begin(), merges.end(),
                   [](const Merge& l, const Merge& r) { return l.height < r.height; });
  return merges;
}

}  // namespace

Labeling ward_linkage(const PointMatrix& points, std::size_t k) {
  const std::size_t n = points.rows();
  if (k < 1 || n < k) {
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) + " invalid for " +
                                         std::to_string(n) + " points");
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  if (n > 1 && k < n) {
    const auto merges = ward_dendrogram(points);
    for (std::size_t m = 0; m < n - k; ++m) {
      const std::size_t ra = find_root(parent, merges[m].a);
      const std::size_t rb = find_root(parent, merges[m].b);
      parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = find_root(parent, i);
  return Labeling::from_raw(std::span<const std::size_t>(roots));
}

}  // namespace cvikit
