#pragma once

#include <optional>

#include "gini/core/types.hpp"

namespace gini {

/// Slack for region-boundary comparisons.
inline constexpr double kRegionSlack = 1e-12;

/// Largest root theta_i of gamma(C_lower_{(u,v),theta}) = t for the polynomial of
/// branch i (1..5); nullopt when its radicand is negative.
std::optional<double> theta_candidate(int i, const UnitPoint& p, const GammaTarget& t);

/// Membership of (u,v) in region R_i: theta_i exists, lies in [W(u,v), M(u,v)], and
/// satisfies the case condition of branch i of gamma(C_lower) at theta = theta_i.
/// On these points theta_i is the supremum of C(u,v) over copulas with gamma = t.
bool region_contains(int i, const UnitPoint& p, const GammaTarget& t);

/// The explicit closed-form inequalities describing R_i (symmetric in u, v).
/// Non-existent curves (negative radicand) and the vanishing denominator at
/// u^v = 1/2 are non-binding. These inequalities coincide with region_contains
/// for R_1 and R_2 but not for R_3..R_5, where they misdescribe the bound; kept
/// for comparison only.
bool explicit_region_inequalities_hold(int i, const UnitPoint& p, const GammaTarget& t);

/// Dense-grid search for a point of R_i. `samples` >= 1e4 is the minimum number
/// of lattice points examined.
bool region_nonempty(int i, const GammaTarget& t, int samples);

}  // namespace gini
