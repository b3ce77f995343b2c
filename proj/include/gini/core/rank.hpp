#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace gini {

/// Rank pairs (R_i, S_i); each coordinate is a permutation of 1..n.
class RankSample {
 public:
  explicit RankSample(std::vector<std::pair<int, int>> ranks);

  std::size_t size() const { return ranks_.size(); }
  const std::vector<std::pair<int, int>>& ranks() const { return ranks_; }

 private:
  std::vector<std::pair<int, int>> ranks_;
};

/// Gini's rank association coefficient:
/// (1 / floor(n^2/2)) * sum_i (|n+1-R_i-S_i| - |R_i-S_i|).
double gamma_rank_statistic(const RankSample& sample);

/// CSV with header `r,s`, one pair per line.
RankSample read_rank_csv(std::istream& in);

}  // namespace gini
