#pragma once

// Classical internal validity indices.
//
// Notation: c_i is the centroid of cluster i, c the global mean, n_i the
// cluster size, W = sum_i sum_{x in C_i} |x - c_i|^2 and
// B = sum_i n_i |c_i - c|^2.
//
//   Dunn        min inter-cluster point distance / max cluster diameter
//               (Dunn 1974)
//   CH          [B / (k-1)] / [W / (N-k)]  (Calinski & Harabasz 1974)
//   DB          mean_i max_{j!=i} (S_i + S_j) / |c_i - c_j|, S_i the mean
//               distance of cluster members to c_i (Davies & Bouldin 1979)
//   Silhouette  mean of (b - a) / max(a, b) (Rousseeuw 1987)
//   WB          k W / B  (Zhao & Franti 2014)
//   I           [(1/k) (E_1 / E_k) D_k]^p  (Maulik & Bandyopadhyay 2002)
//
// All functions require k >= 2 and N > k. Divisions by zero are reported
// as divide-degenerate errors.

#include <string>

#include "cvikit/dataset.hpp"
#include "cvikit/pairwise.hpp"
#include "cvikit/scores.hpp"

namespace cvikit {

struct CviResult {
  std::string cvi_name;
  double value = 0.0;
  Direction direction = Direction::Max;
};

CviResult dunn(const PointMatrix& points, const Labeling& labels);
CviResult dunn(const CondensedDistances& dist, const Labeling& labels);
CviResult calinski_harabasz(const PointMatrix& points, const Labeling& labels);
CviResult davies_bouldin(const PointMatrix& points, const Labeling& labels);
CviResult silhouette(const PointMatrix& points, const Labeling& labels);
CviResult silhouette(const CondensedDistances& dist, const Labeling& labels);
CviResult wb_index(const PointMatrix& points, const Labeling& labels);
CviResult i_index(const PointMatrix& points, const Labeling& labels, double p = 2.0);

/// Cluster means, row i is c_i.
PointMatrix centroids(const PointMatrix& points, const Labeling& labels);

}  // namespace cvikit
