#pragma once

// Metrics that judge a validity index against the ARI ground truth.
//
// hit-the-best: 1 when the index's best method is also ARI's best method.
// rank-difference: both rows are quantized to ranks 1..N-1 by splitting
// [min, max] into N-1 equal intervals (the optimum always gets rank 1),
// then compared with the L1 distance, which lies in [0, N(N-2)].

#include <cstddef>
#include <string>
#include <vector>

#include "cvikit/scores.hpp"

namespace cvikit {

/// Rows marked Min are negated first. Rank k covers [M - k w, M - (k-1) w)
/// with w = (M - m)/(N - 1); the maximum gets rank 1 and the minimum N - 1.
/// An all-equal sequence ranks every entry 1.
RankSequence quantize_ranks(const ScoreSequence& seq);

/// Sum of |a_i - b_i|. Throws invalid-input on length mismatch.
int rank_difference(const RankSequence& a, const RankSequence& b);

/// Indices attaining the optimum under the row's direction (exact compare).
std::vector<std::size_t> argbest(const ScoreSequence& seq);

/// 1 iff argbest(cvi) and argbest(ari) intersect.
int hit_the_best(const ScoreSequence& cvi, const ScoreSequence& ari);

/// Per-dataset outcome, columns parallel to `cvi_names`.
struct DatasetEvaluation {
  std::string dataset;
  std::vector<std::string> cvi_names;
  RankSequence ari_ranks;
  std::vector<RankSequence> cvi_ranks;
  std::vector<int> hits;
  std::vector<int> rank_differences;
};

DatasetEvaluation evaluate_score_matrix(const ScoreMatrix& matrix);

struct EvalReport {
  std::vector<std::string> datasets;
  std::vector<std::string> cvi_names;
  std::vector<std::vector<int>> hit_table;       // dataset x CVI
  std::vector<std::vector<int>> rankdiff_table;  // dataset x CVI
  std::vector<int> hit_totals;
  std::vector<int> rankdiff_totals;
  std::vector<int> hit_ranks;
  std::vector<int> rankdiff_ranks;
};

/// Column sums and competition ranks. Throws invalid-input when the
/// evaluations do not share the same CVI list.
EvalReport aggregate(const std::vector<DatasetEvaluation>& evaluations);

/// "1224" ranking: ties share the best rank, the next distinct value skips.
std::vector<int> competition_ranks(const std::vector<int>& totals, bool larger_is_better);

}  // namespace cvikit
