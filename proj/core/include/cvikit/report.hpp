#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cvikit/eval_metrics.hpp"
#include "cvikit/k_prediction.hpp"
#include "cvikit/scores.hpp"

namespace cvikit {

enum class OutputFormat { Csv, Text };

OutputFormat parse_output_format(std::string_view name);

/// A header, body rows and footer rows (totals, ranks) of string cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> footer;
};

/// Csv: comma-separated, footer rows appended. Text: right-aligned columns
/// with a rule under the header and above the footer.
void render_table(std::ostream& out, const Table& table, OutputFormat format);

/// Fixed three-decimal display form.
std::string display_number(double value);

/// Dataset rows x CVI columns with Total and (rank) footers.
Table hit_table(const EvalReport& report);
Table rankdiff_table(const EvalReport& report);

/// Scores as displayed in reports, ARI first, one row per index.
Table score_table(const ScoreMatrix& matrix);
/// Quantized rank sequences per index, ARI first.
Table rank_sequence_table(const ScoreMatrix& matrix, const DatasetEvaluation& evaluation);

/// CVI rows x algorithm columns of predicted k; successful predictions are
/// marked with a trailing '*'. `grid[a][c]` is algorithm a, index c.
Table k_prediction_table(const std::vector<std::vector<KPrediction>>& grid);

}  // namespace cvikit
