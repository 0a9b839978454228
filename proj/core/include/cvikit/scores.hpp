#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cvikit {

/// Which extreme of a validity index marks the best clustering.
enum class Direction { Max, Min };

char direction_marker(Direction d) noexcept;  // '+' or '-'

/// One validity index evaluated across a list of clustering methods.
struct ScoreSequence {
  std::string cvi_name;
  Direction direction = Direction::Max;
  std::vector<double> scores;

  std::size_t size() const noexcept { return scores.size(); }
  /// N >= 2 and all scores finite.
  void validate() const;
};

/// Score grid for one dataset: ARI row plus one row per internal index.
struct ScoreMatrix {
  std::string dataset;
  std::vector<std::string> methods;
  ScoreSequence ari_row;
  std::vector<ScoreSequence> cvi_rows;

  void validate() const;
};

/// Quantized ranks 1..N-1 where rank 1 is the optimum.
class RankSequence {
 public:
  RankSequence() = default;
  explicit RankSequence(std::vector<int> ranks);

  std::size_t size() const noexcept { return ranks_.size(); }
  int operator[](std::size_t i) const noexcept { return ranks_[i]; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }

  friend bool operator==(const RankSequence&, const RankSequence&) = default;

 private:
  std::vector<int> ranks_;
};

}  // namespace cvikit
