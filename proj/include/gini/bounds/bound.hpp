#pragma once

#include <array>
#include <optional>

#include "gini/core/types.hpp"

namespace gini {

/// Alarm threshold for the final clamp of the upper bound into [W, M].
inline constexpr double kClampAlarm = 1e-12;

struct ThetaReport {
  UnitPoint point;
  GammaTarget t;
  std::array<std::optional<double>, 5> theta;  // nullopt: candidate does not exist
  std::array<bool, 5> active{};                // region membership
  std::optional<double> inner_max;             // max over active theta; nullopt if none
  double bound = 0.0;
  bool clamped = false;
};

/// Pointwise supremum of C(u,v) over copulas with Gini's gamma t.
/// With no active region the constraint is absent and the bound is M(u,v).
ThetaReport upper_bound(const UnitPoint& p, const GammaTarget& t);
double upper_bound_value(double u, double v, double t);

/// Pointwise infimum: v - upper(1-u, v; -t).
double lower_bound(const UnitPoint& p, const GammaTarget& t);
double lower_bound_value(double u, double v, double t);

/// Largest difference between two active theta values (0 with fewer than two).
double active_theta_spread(const ThetaReport& report);

Bivariate upper_bound_fn(const GammaTarget& t);
Bivariate lower_bound_fn(const GammaTarget& t);

}  // namespace gini
