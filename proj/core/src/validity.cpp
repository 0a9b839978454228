#include "cvikit/validity.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "cvikit/cvi.hpp"
#include "cvikit/dsi.hpp"
#include "cvikit/error.hpp"
#include "cvikit/pairwise.hpp"

namespace cvikit {

std::string_view cvi_name(Cvi cvi) noexcept {
  switch (cvi) {
    case Cvi::Dunn: return "Dunn";
    case Cvi::CalinskiHarabasz: return "CH";
    case Cvi::DaviesBouldin: return "DB";
    case Cvi::Silhouette: return "Silhouette";
    case Cvi::WB: return "WB";
    case Cvi::I: return "I";
    case Cvi::Dsi: return "DSI";
  }
  return "";
}

Direction cvi_direction(Cvi cvi) noexcept {
  return cvi == Cvi::DaviesBouldin || cvi == Cvi::WB ? Direction::Min : Direction::Max;
}

std::vector<Cvi> all_cvis() {
  return {Cvi::Dunn, Cvi::CalinskiHarabasz, Cvi::DaviesBouldin, Cvi::Silhouette,
          Cvi::WB,   Cvi::I,                Cvi::Dsi};
}

Cvi parse_cvi(std::string_view name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "dunn") return Cvi::Dunn;
  if (key == "ch" || key == "calinski_harabasz") return Cvi::CalinskiHarabasz;
  if (key == "db" || key == "davies_bouldin") return Cvi::DaviesBouldin;
  if (key == "silhouette" || key == "sil") return Cvi::Silhouette;
  if (key == "wb") return Cvi::WB;
  if (key == "i") return Cvi::I;
  if (key == "dsi") return Cvi::Dsi;
  throw Error(ErrorKind::InvalidInput, "unknown validity index '" + std::string(name) + "'");
}

std::vector<Cvi> parse_cvi_list(std::string_view list) {
  if (list == "all") return all_cvis();
  std::vector<Cvi> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    const auto item = list.substr(start, end - start);
    if (!item.empty()) {
      const Cvi cvi = parse_cvi(item);
      if (std::find(out.begin(), out.end(), cvi) == out.end()) out.push_back(cvi);
    }
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty validity index list");
  return out;
}

double compute_cvi(Cvi cvi, const PointMatrix& points, const Labeling& labels,
                   const CviOptions& options) {
  switch (cvi) {
    case Cvi::CalinskiHarabasz: return calinski_harabasz(points, labels).value;
    case Cvi::DaviesBouldin: return davies_bouldin(points, labels).value;
    case Cvi::WB: return wb_index(points, labels).value;
    case Cvi::I: return i_index(points, labels, options.i_index_power).value;
    case Cvi::Dsi: {
      DsiOptions dsi_options;
      dsi_options.subsample_cap = options.subsample_cap;
      dsi_options.seed = options.seed;
      return dsi(points, labels, dsi_options).value;
    }
    case Cvi::Dunn:
    case Cvi::Silhouette: break;
  }

  const bool capped = options.subsample_cap && *options.subsample_cap < points.rows();
  if (!capped) {
    return cvi == Cvi::Dunn ? dunn(points, labels).value : silhouette(points, labels).value;
  }
  const auto idx = subsample_indices(points.rows(), *options.subsample_cap, options.seed);
  std::vector<std::size_t> ids;
  ids.reserve(idx.size());
  for (std::size_t i : idx) ids.push_back(labels[i]);
  const auto sub_labels = Labeling::from_raw(std::span<const std::size_t>(ids));
  const auto sub_points = points.select_rows(idx);
  return cvi == Cvi::Dunn ? dunn(sub_points, sub_labels).value
                          : silhouette(sub_points, sub_labels).value;
}

}  // namespace cvikit
