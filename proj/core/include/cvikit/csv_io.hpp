#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cvikit/dataset.hpp"
#include "cvikit/scores.hpp"

namespace cvikit {

/// Reads the canonical dataset CSV: header row, feature columns, and an
/// optional label column. Without an explicit `label_column` a column named
/// `label` is used when present. Label symbols are remapped to dense ids in
/// order of first appearance.
Dataset load_dataset_csv(const std::filesystem::path& path,
                         const std::optional<std::string>& label_column = std::nullopt);
Dataset parse_dataset_csv(std::istream& in, std::string name,
                          const std::optional<std::string>& label_column = std::nullopt);

/// Writes features as f0..f{d-1} using shortest round-trip decimal form,
/// followed by a `label` column holding class symbols when labels exist.
void write_dataset_csv(std::ostream& out, const Dataset& dataset);
void save_dataset_csv(const std::filesystem::path& path, const Dataset& dataset);

/// Score-matrix CSV: `validity,direction,<method>...`, ARI first.
ScoreMatrix load_score_matrix(const std::filesystem::path& path);
ScoreMatrix parse_score_matrix(std::istream& in, std::string dataset);
void write_score_matrix(std::ostream& out, const ScoreMatrix& matrix);
void save_score_matrix(const std::filesystem::path& path, const ScoreMatrix& matrix);

/// Label file: single `cluster` column of integer ids, one row per point.
Labeling load_label_file(const std::filesystem::path& path);
Labeling parse_label_file(std::istream& in);
void write_label_file(std::ostream& out, const Labeling& labels);
void save_label_file(const std::filesystem::path& path, const Labeling& labels);

/// Shortest decimal string that re-parses to the same double.
std::string format_double(double value);

}  // namespace cvikit
