#include "cvikit/scores.hpp"

#include <algorithm>
#include <cmath>

#include "cvikit/error.hpp"

namespace cvikit {

char direction_marker(Direction d) noexcept { return d == Direction::Max ? '+' : '-'; }

void ScoreSequence::validate() const {
  if (scores.size() < 2) {
    throw Error(ErrorKind::TooSmall, "score sequence '" + cvi_name + "' needs at least 2 scores");
  }
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorKind::InvalidValue, "score sequence '" + cvi_name + "' has a non-finite score");
    }
  }
}

void ScoreMatrix::validate() const {
  if (ari_row.direction != Direction::Max) {
    throw Error(ErrorKind::InvalidValue, "ARI row must have direction '+'");
  }
  ari_row.validate();
  if (ari_row.size() != methods.size()) {
    throw Error(ErrorKind::MalformedFile, "ARI row length does not match method count");
  }
  for (const auto& row : cvi_rows) {
    row.validate();
    if (row.size() != methods.size()) {
      throw Error(ErrorKind::MalformedFile,
                  "row '" + row.cvi_name + "' length does not match method count");
    }
  }
}

RankSequence::RankSequence(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) return;
  const int n = static_cast<int>(ranks_.size());
  const int upper = std::max(1, n - 1);
  bool has_one = false;
  for (int r : ranks_) {
    if (r < 1 || r > upper) {
      throw Error(ErrorKind::InvalidValue, "rank " + std::to_string(r) + " outside 1.." +
                                               std::to_string(upper));
    }
    has_one = has_one || r == 1;
  }
  if (!has_one) throw Error(ErrorKind::InvalidValue, "rank sequence has no rank 1");
}

}  // namespace cvikit
