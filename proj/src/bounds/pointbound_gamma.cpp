#include "gini/bounds/pointbound_gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gini {

double i1_closed(const PointBoundSpec& spec) {
  const double th = spec.theta();
  return th * (1.0 - spec.a() - spec.b() + th);
}

int i2_case(const PointBoundSpec& spec) {
  const double a = std::max(spec.a(), spec.b());
  const double b = std::min(spec.a(), spec.b());
  const double th = spec.theta();
  const double mid = (1.0 + th) / 2.0;
  if (a >= 0.5 + th) return 1;
  if (std::max(b + th, mid) <= a && a <= 0.5 + th) return 2;
  if (b + th <= a && a <= mid) return 3;
  if (mid <= a && a <= b + th) return 4;
  if (a <= std::min(b + th, mid)) return 5;
  throw InternalError("i2_case: no case matches");
}

double i2_closed(const PointBoundSpec& spec) {
  const double a = std::max(spec.a(), spec.b());
  const double b = std::min(spec.a(), spec.b());
  const double th = spec.theta();
  switch (i2_case(spec)) {
    case 1:
      return 0.25;
    case 2: {
      const double d = a - th - 0.5;
      return 0.25 + d * d;
    }
    case 3:
      return (1.0 + 2.0 * th - 4.0 * a * th + 3.0 * th * th) / 4.0;
    case 4:
      return ((th + 1.0 - a - b) * (3.0 * th - 3.0 * a + b + 1.0) + 1.0) / 4.0;
    default:
      return (1.0 - (a - b) * (a - b)) / 4.0 + (1.0 - a - b) * th / 2.0 + th * th / 2.0;
  }
}

bool gamma_branch_condition(int branch, double hi, double lo, double theta, double slack) {
  const double mid = (1.0 + theta) / 2.0;
  switch (branch) {
    case 1:
      return 0.5 + theta <= hi + slack;
    case 2:
      return std::max(lo + theta, mid) <= hi + slack && hi <= 0.5 + theta + slack;
    case 3:
      return lo + theta <= hi + slack && hi <= mid + slack;
    case 4:
      return mid <= hi + slack && hi <= lo + theta + slack;
    case 5:
      return hi <= std::min(lo + theta, mid) + slack;
    default:
      throw DomainError("gamma_branch_condition: branch must be 1..5");
  }
}

double gamma_branch_formula(int branch, double a, double b, double theta) {
  const double hi = std::max(a, b);
  const double th = theta;
  const double common = 4.0 * th * th + 4.0 * th * (1.0 - a - b) - 1.0;
  switch (branch) {
    case 1:
      return common;
    case 2: {
      const double d = 2.0 * hi - 2.0 * th - 1.0;
      return d * d + common;
    }
    case 3:
      return 2.0 * th - 4.0 * hi * th + 7.0 * th * th + 4.0 * th * (1.0 - a - b) - 1.0;
    case 4: {
      const double d = a + b - 1.0 - 4.0 * th;
      return d * d + 2.0 * (a + b - 1.0 - th) * std::fabs(a - b) - 9.0 * th * th - 1.0;
    }
    case 5:
      return 6.0 * th * th + 6.0 * th * (1.0 - a - b) - (a - b) * (a - b) - 1.0;
    default:
      throw DomainError("gamma_branch_formula: branch must be 1..5");
  }
}

GammaBranchValue gamma_lower_pointbound(const PointBoundSpec& spec) {
  const double hi = std::max(spec.a(), spec.b());
  const double lo = std::min(spec.a(), spec.b());
  for (int branch = 1; branch <= 5; ++branch) {
    if (gamma_branch_condition(branch, hi, lo, spec.theta())) {
      return {branch, gamma_branch_formula(branch, spec.a(), spec.b(), spec.theta())};
    }
  }
  std::ostringstream os;
  os << "gamma_lower_pointbound: no branch matches (a,b,theta) = (" << spec.a() << ", " << spec.b()
     << ", " << spec.theta() << ")";
  throw InternalError(os.str());
}

}  // namespace gini
