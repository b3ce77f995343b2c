#pragma once

#include "gini/core/types.hpp"

namespace gini {

/// int_0^1 C_lower(u, 1-u) du for the lower point-bound copula: theta(1-a-b+theta).
double i1_closed(const PointBoundSpec& spec);

/// int_0^1 C_lower(u, u) du, by the five location cases (a and b swapped so that b <= a).
double i2_closed(const PointBoundSpec& spec);

/// Case of the I2 integral selected for the spec (1..5), first match in order.
int i2_case(const PointBoundSpec& spec);

struct GammaBranchValue {
  int branch;  // 1..5
  double value;
};

/// Whether the case condition of branch `branch` holds for hi = a v b, lo = a ^ b,
/// with every inequality relaxed by `slack`.
bool gamma_branch_condition(int branch, double hi, double lo, double theta, double slack = 0.0);

/// The polynomial of branch `branch`, evaluated without checking its condition.
double gamma_branch_formula(int branch, double a, double b, double theta);

/// Gini's gamma of the lower point-bound copula: the first branch whose condition holds.
GammaBranchValue gamma_lower_pointbound(const PointBoundSpec& spec);

}  // namespace gini
