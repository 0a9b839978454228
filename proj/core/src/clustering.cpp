#include "cvikit/clustering.hpp"

#include <cctype>
#include <string>

#include "cvikit/error.hpp"

namespace cvikit {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::KMeans: return "kmeans";
    case Algorithm::Ward: return "ward";
    case Algorithm::GmmEm: return "gmm";
  }
  return "";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "kmeans" || key == "k-means") return Algorithm::KMeans;
  if (key == "ward") return Algorithm::Ward;
  if (key == "gmm" || key == "em") return Algorithm::GmmEm;
  throw Error(ErrorKind::InvalidInput, "unknown clusterer '" + std::string(name) + "'");
}

ClusteringConfig ClusteringConfig::defaults(Algorithm algorithm, std::size_t k, std::uint64_t seed) {
  ClusteringConfig cfg;
  cfg.algorithm = algorithm;
  cfg.k = k;
  cfg.seed = seed;
  cfg.max_iter = algorithm == Algorithm::GmmEm ? 100 : 300;
  return cfg;
}

void ClusteringConfig::validate() const {
  if (k < 2) throw Error(ErrorKind::InvalidK, "k must be at least 2");
  if (n_init < 1) throw Error(ErrorKind::InvalidInput, "n_init must be at least 1");
  if (max_iter < 1) throw Error(ErrorKind::InvalidInput, "max_iter must be at least 1");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tol must be positive");
}

Labeling cluster(const PointMatrix& points, const ClusteringConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::KMeans: return kmeans(points, cfg).labels;
    case Algorithm::Ward:
      cfg.validate();
      return ward_linkage(points, cfg.k);
    case Algorithm::GmmEm: return gmm_em(points, cfg).labels;
  }
  throw Error(ErrorKind::InvalidInput, "unknown clusterer");
}

}  // namespace cvikit
