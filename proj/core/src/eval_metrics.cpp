#include "cvikit/eval_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cvikit/error.hpp"

namespace cvikit {

RankSequence quantize_ranks(const ScoreSequence& seq) {
  const std::size_t n = seq.size();
  if (n < 2) throw Error(ErrorKind::TooSmall, "rank quantization needs at least 2 scores");
  std::vector<double> values = seq.scores;
  if (seq.direction == Direction::Min)
    for (double& v : values) v = -v;

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const int intervals = static_cast<int>(n) - 1;
  std::vector<int> ranks(n, 1);
  if (hi == lo) return RankSequence(std::move(ranks));

  const double span = hi - lo;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == hi) continue;
    // Rank r covers [hi - r*w, hi - (r-1)*w), w = span / intervals.
    const double position = (hi - values[i]) * intervals / span;
    ranks[i] = std::clamp(static_cast<int>(std::ceil(position)), 1, intervals);
  }
  return RankSequence(std::move(ranks));
}

int rank_difference(const RankSequence& a, const RankSequence& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidInput, "rank sequences have different lengths");
  }
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

std::vector<std::size_t> argbest(const ScoreSequence& seq) {
  if (seq.scores.empty()) return {};
  const auto best = seq.direction == Direction::Max
                        ? *std::max_element(seq.scores.begin(), seq.scores.end())
                        : *std::min_element(seq.scores.begin(), seq.scores.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq.scores[i] == best) out.push_back(i);
  return out;
}

int hit_the_best(const ScoreSequence& cvi, const ScoreSequence& ari) {
  if (cvi.size() != ari.size()) {
    throw Error(ErrorKind::InvalidInput, "'" + cvi.cvi_name + "' and ARI rows differ in length");
  }
  if (ari.direction != Direction::Max) {
    throw Error(ErrorKind::InvalidInput, "ARI row must be maximized");
  }
  const auto lhs = argbest(cvi);
  const auto rhs = argbest(ari);
  for (std::size_t i : lhs)
    if (std::find(rhs.begin(), rhs.end(), i) != rhs.end()) return 1;
  return 0;
}

DatasetEvaluation evaluate_score_matrix(const ScoreMatrix& matrix) {
  matrix.validate();
  DatasetEvaluation out;
  out.dataset = matrix.dataset;
  out.ari_ranks = quantize_ranks(matrix.ari_row);
  for (const auto& row : matrix.cvi_rows) {
    out.cvi_names.push_back(row.cvi_name);
    out.hits.push_back(hit_the_best(row, matrix.ari_row));
    out.cvi_ranks.push_back(quantize_ranks(row));
    out.rank_differences.push_back(rank_difference(out.cvi_ranks.back(), out.ari_ranks));
  }
  return out;
}

std::vector<int> competition_ranks(const std::vector<int>& totals, bool larger_is_better) {
  std::vector<int> ranks(totals.size(), 1);
  for (std::size_t i = 0; i < totals.size(); ++i)
    for (std::size_t j = 0; j < totals.size(); ++j) {
      const bool better = larger_is_better ? totals[j] > totals[i] : totals[j] < totals[i];
      if (better) ++ranks[i];
    }
  return ranks;
}

EvalReport aggregate(const std::vector<DatasetEvaluation>& evaluations) {
  EvalReport report;
  if (evaluations.empty()) return report;
  report.cvi_names = evaluations.front().cvi_names;
  const std::size_t m = report.cvi_names.size();
  report.hit_totals.assign(m, 0);
  report.rankdiff_totals.assign(m, 0);
  for (const auto& e : evaluations) {
    if (e.cvi_names != report.cvi_names) {
      throw Error(ErrorKind::InvalidInput,
                  "dataset '" + e.dataset + "' does not cover the same validity indices");
    }
    report.datasets.push_back(e.dataset);
    report.hit_table.push_back(e.hits);
    report.rankdiff_table.push_back(e.rank_differences);
    for (std::size_t c = 0; c < m; ++c) {
      report.hit_totals[c] += e.hits[c];
      report.rankdiff_totals[c] += e.rank_differences[c];
    }
  }
  report.hit_ranks = competition_ranks(report.hit_totals, true);
  report.rankdiff_ranks = competition_ranks(report.rankdiff_totals, false);
  return report;
}

}  // namespace cvikit
