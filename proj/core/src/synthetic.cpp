#include "cvikit/synthetic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

#include "cvikit/error.hpp"

namespace cvikit {

SyntheticKind parse_synthetic_kind(std::string_view name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "blobs") return SyntheticKind::Blobs;
  if (key == "ring") return SyntheticKind::Ring;
  if (key == "moons") return SyntheticKind::Moons;
  throw Error(ErrorKind::InvalidSpec, "unknown synthetic kind '" + std::string(name) + "'");
}

void SyntheticSpec::validate() const {
  if (per_class < 2) throw Error(ErrorKind::InvalidSpec, "need at least 2 points per class");
  if (!std::isfinite(stddev) || stddev < 0.0) {
    throw Error(ErrorKind::InvalidSpec, "standard deviation must be finite and non-negative");
  }
  if (kind == SyntheticKind::Blobs) {
    if (classes < 2) throw Error(ErrorKind::InvalidSpec, "blobs need at least 2 classes");
    if (dims < 1) throw Error(ErrorKind::InvalidSpec, "blobs need at least 1 dimension");
    if (dims == 1 && classes > 2) {
      throw Error(ErrorKind::InvalidSpec, "more than 2 blobs need at least 2 dimensions");
    }
    if (!(separation >= 0.0) || !std::isfinite(separation)) {
      throw Error(ErrorKind::InvalidSpec, "separation must be finite and non-negative");
    }
  } else if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidSpec, "radius must be positive");
  }
}

Dataset generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::numbers::pi;

  std::size_t classes = 2;
  std::size_t dims = 2;
  std::vector<double> values;
  std::vector<std::size_t> ids;
  std::string default_name;

  switch (spec.kind) {
    case SyntheticKind::Blobs: {
      classes = spec.classes;
      dims = spec.dims;
      default_name = "blobs";
      // Centres on a regular polygon whose side equals `separation`, so
      // every pair of centres is at least that far apart.
      const double r = classes == 2 ? spec.separation / 2.0
                                    : spec.separation / (2.0 * std::sin(pi / static_cast<double>(classes)));
      for (std::size_t c = 0; c < classes; ++c) {
        const double angle = 2.0 * pi * static_cast<double>(c) / static_cast<double>(classes);
        std::vector<double> centre(dims, 0.0);
        centre[0] = r * std::cos(angle);
        if (dims > 1) centre[1] = r * std::sin(angle);
        for (std::size_t p = 0; p < spec.per_class; ++p) {
          for (std::size_t j = 0; j < dims; ++j) values.push_back(centre[j] + spec.stddev * noise(rng));
          ids.push_back(c);
        }
      }
      break;
    }
    case SyntheticKind::Ring: {
      default_name = "ring";
      for (std::size_t p = 0; p < spec.per_class; ++p) {
        values.push_back(spec.stddev * noise(rng));
        values.push_back(spec.stddev * noise(rng));
        ids.push_back(0);
      }
      for (std::size_t p = 0; p < spec.per_class; ++p) {
        const double angle = 2.0 * pi * unit(rng);
        values.push_back(spec.radius * std::cos(angle) + spec.stddev * noise(rng));
        values.push_back(spec.radius * std::sin(angle) + spec.stddev * noise(rng));
        ids.push_back(1);
      }
      break;
    }
    case SyntheticKind::Moons: {
      default_name = "moons";
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t p = 0; p < spec.per_class; ++p) {
          const double t = pi * static_cast<double>(p) / static_cast<double>(spec.per_class - 1);
          const double x = c == 0 ? std::cos(t) : 1.0 - std::cos(t);
          const double y = c == 0 ? std::sin(t) : 0.5 - std::sin(t);
          values.push_back(spec.radius * x + spec.stddev * noise(rng));
          values.push_back(spec.radius * y + spec.stddev * noise(rng));
          ids.push_back(c);
        }
      }
      break;
    }
  }

  Dataset dataset;
  dataset.name = spec.name.empty() ? default_name : spec.name;
  const std::size_t n = ids.size();
  dataset.points = PointMatrix(n, dims, std::move(values));
  dataset.true_labels = Labeling(std::move(ids), classes);
  for (std::size_t c = 0; c < classes; ++c) dataset.class_names.push_back(std::to_string(c));
  dataset.validate();
  return dataset;
}

}  // namespace cvikit
