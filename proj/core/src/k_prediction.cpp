#include "cvikit/k_prediction.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "cvikit/error.hpp"

namespace cvikit {
namespace {

std::vector<std::size_t> normalized_k_values(std::span<const std::size_t> k_values, std::size_t n) {
  if (k_values.empty()) throw Error(ErrorKind::InvalidK, "k sweep is empty");
  std::vector<std::size_t> ks(k_values.begin(), k_values.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (std::size_t k : ks) {
    if (k < 2 || k > n) {
      throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) + " outside 2.." + std::to_string(n));
    }
  }
  return ks;
}

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidInput, "'" + std::string(text) + "' is not a cluster count");
  }
  return value;
}

}  // namespace

std::size_t select_k(std::span<const std::size_t> k_values,
                     std::span<const std::optional<double>> scores, Direction direction) {
  std::optional<std::size_t> best_k;
  double best = 0.0;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (!scores[i]) continue;
    const double s = *scores[i];
    const bool better = !best_k || (direction == Direction::Max ? s > best : s < best) ||
                        (s == best && k_values[i] < *best_k);
    if (better) {
      best = s;
      best_k = k_values[i];
    }
  }
  if (!best_k) throw Error(ErrorKind::NoComputableK, "validity index undefined at every k");
  return *best_k;
}

std::vector<KPrediction> predict_k_all(const PointMatrix& points, const ClusteringConfig& base,
                                       std::span<const Cvi> cvis,
                                       std::span<const std::size_t> k_values,
                                       std::optional<std::size_t> true_c,
                                       const CviOptions& options) {
  const auto ks = normalized_k_values(k_values, points.rows());
  std::vector<KPrediction> out(cvis.size());
  for (std::size_t c = 0; c < cvis.size(); ++c) {
    out[c].cvi_name = std::string(cvi_name(cvis[c]));
    out[c].algorithm = base.algorithm;
    out[c].k_values = ks;
  }

  for (std::size_t k : ks) {
    ClusteringConfig cfg = base;
    cfg.k = k;
    std::optional<Labeling> labels;
    try {
      labels = cluster(points, cfg);
    } catch (const Error& e) {
      for (auto& p : out) {
        p.scores.emplace_back();
        p.warnings.push_back("k=" + std::to_string(k) + ": clustering failed: " + e.what());
      }
      continue;
    }
    for (std::size_t c = 0; c < cvis.size(); ++c) {
      try {
        out[c].scores.emplace_back(compute_cvi(cvis[c], points, *labels, options));
      } catch (const Error& e) {
        out[c].scores.emplace_back();
        out[c].warnings.push_back("k=" + std::to_string(k) + ": " + std::string(to_string(e.kind())) +
                                  ": " + e.what());
      }
    }
  }

  for (std::size_t c = 0; c < cvis.size(); ++c) {
    out[c].k_hat = select_k(out[c].k_values, out[c].scores, cvi_direction(cvis[c]));
    if (true_c) out[c].success = out[c].k_hat == *true_c;
  }
  return out;
}

KPrediction predict_k(const PointMatrix& points, const ClusteringConfig& base, Cvi cvi,
                      std::span<const std::size_t> k_values, std::optional<std::size_t> true_c,
                      const CviOptions& options) {
  const Cvi one[] = {cvi};
  return std::move(predict_k_all(points, base, one, k_values, true_c, options).front());
}

std::vector<std::size_t> parse_k_range(std::string_view text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t lo = parse_size(text.substr(0, dots));
    const std::size_t hi = parse_size(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::InvalidInput, "empty k range '" + std::string(text) + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    out.push_back(parse_size(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace cvikit
