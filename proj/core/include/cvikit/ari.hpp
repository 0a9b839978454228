#pragma once

#include "cvikit/dataset.hpp"

namespace cvikit {

/// Adjusted Rand Index (Hubert & Arabie 1985) from the contingency table.
/// Returns 1 for identical partitions, including the all-singleton and
/// single-cluster cases where the chance-corrected form is 0/0.
/// Throws invalid-input on length mismatch or N < 2.
double adjusted_rand_index(const Labeling& truth, const Labeling& predicted);

}  // namespace cvikit
