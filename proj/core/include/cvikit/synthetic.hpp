#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cvikit/dataset.hpp"

namespace cvikit {

enum class SyntheticKind {
  Blobs,  // isotropic Gaussian blobs on a regular polygon
  Ring,   // central blob inside a noisy ring
  Moons,  // two interleaving half circles
};

SyntheticKind parse_synthetic_kind(std::string_view name);

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::Blobs;
  std::size_t classes = 3;      // blobs only; ring and moons have 2
  std::size_t per_class = 50;
  std::size_t dims = 2;         // blobs only
  double stddev = 1.0;
  double separation = 50.0;     // blobs: distance between neighbouring centres
  double radius = 10.0;         // ring radius, moon radius
  std::string name;

  void validate() const;
};

Dataset generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace cvikit
