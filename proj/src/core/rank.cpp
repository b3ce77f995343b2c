#include "gini/core/rank.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

#include "gini/core/types.hpp"

namespace gini {

namespace {

void check_permutation(const std::vector<int>& values, const char* label) {
  const int n = static_cast<int>(values.size());
  std::vector<int> seen(n + 1, 0);
  std::ostringstream bad;
  for (int r : values) {
    if (r < 1 || r > n) {
      bad << " out-of-range " << label << "=" << r << ";";
      continue;
    }
    ++seen[r];
  }
  for (int r = 1; r <= n; ++r) {
    if (seen[r] > 1) bad << " duplicate " << label << "=" << r << ";";
    if (seen[r] == 0) bad << " missing " << label << "=" << r << ";";
  }
  if (!bad.str().empty()) throw DomainError("RankSample: malformed ranks:" + bad.str());
}

}  // namespace

RankSample::RankSample(std::vector<std::pair<int, int>> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw DomainError("RankSample: empty sample");
  std::vector<int> r;
  std::vector<int> s;
  r.reserve(ranks_.size());
  s.reserve(ranks_.size());
  for (const auto& [ri, si] : ranks_) {
    r.push_back(ri);
    s.push_back(si);
  }
  check_permutation(r, "R");
  check_permutation(s, "S");
}

double gamma_rank_statistic(const RankSample& sample) {
  const long n = static_cast<long>(sample.size());
  if (n < 2) throw DomainError("gamma_rank_statistic: needs n >= 2 (floor(n^2/2) = 0 for n = 1)");
  long total = 0;
  for (const auto& [r, s] : sample.ranks()) {
    total += std::labs(n + 1 - r - s) - std::labs(static_cast<long>(r) - s);
  }
  return static_cast<double>(total) / static_cast<double>((n * n) / 2);
}

RankSample read_rank_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "r,s") {
    throw DomainError("rank CSV: missing `r,s` header");
  }
  std::vector<std::pair<int, int>> ranks;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int r = 0;
    int s = 0;
    char comma = 0;
    if (!(row >> r >> comma >> s) || comma != ',') {
      throw DomainError("rank CSV: malformed row `" + line + "`");
    }
    ranks.emplace_back(r, s);
  }
  return RankSample(std::move(ranks));
}

}  // namespace gini
