#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "gini/core/types.hpp"
#include "gini/oracle/checkerboard.hpp"

namespace gini::oracle {

enum class Direction { Min, Max };
enum class LpStatus { Optimal, Infeasible };

std::string_view to_string(Direction d);
std::string_view to_string(LpStatus s);

struct LpOutcome {
  Direction direction = Direction::Max;
  LpStatus status = LpStatus::Infeasible;
  double optimum = 0.0;
  std::optional<Checkerboard> argument;  // set when optimal
  long iterations = 0;
};

/// Tolerance on the gamma equality of a returned argument.
inline constexpr double kGammaEqualityTol = 1e-9;

/// Extreme value of C(u,v) over order-n checkerboard copulas with gamma = t.
/// Infeasibility (t outside the order-n gamma range) is reported via status.
/// Throws InternalError when the solver stalls past 10 n^4 pivots or returns an
/// argument that fails verification.
LpOutcome lp_extreme(int n, const UnitPoint& p, const GammaTarget& t, Direction direction);

/// Attainable gamma range [min, max] over order-n checkerboards.
std::pair<double, double> gamma_range(int n);

}  // namespace gini::oracle
