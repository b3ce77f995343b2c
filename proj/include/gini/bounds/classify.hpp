#pragma once

#include <string_view>
#include <utility>

#include "gini/core/types.hpp"

namespace gini {

enum class BoundClassification {
  FrechetLower,        // identically W
  ProperQuasiCopula,   // quasi-copula with a negative-volume rectangle
  ProperCopulaStrict,  // copula different from W and M
  FrechetUpper,        // identically M
};

std::string_view to_string(BoundClassification c);

BoundClassification classify_upper(const GammaTarget& t);
BoundClassification classify_lower(const GammaTarget& t);

/// (u+v)^2 + 2uv - 6(u^v) <= -1-t: the set between the two hyperbolic arcs on
/// which the theta_5 branch of the upper bound binds.
bool hyperbolic_set_contains(const UnitPoint& p, const GammaTarget& t);

/// Diagonal points where the arcs meet: p1 = (3+sqrt(3-6t))/6, p2 = (3-sqrt(3-6t))/6
/// on both coordinates. Requires t <= 1/2.
std::pair<UnitPoint, UnitPoint> hyperbolic_corner_points(const GammaTarget& t);

/// Mixed partial d^2/dudv of the theta_5 branch:
/// sqrt(3) (t - 12uv + 6u + 6v - 2) / (3 Q^{3/2}), Q = 5u^2+5v^2-6u-6v+2uv+2t+5.
/// Equals t/3 at p1 and p2. Requires p in the closure of the hyperbolic set.
double mixed_partial_in_S(const UnitPoint& p, const GammaTarget& t);

}  // namespace gini
