#include "gini/bounds/bound.hpp"

#include <algorithm>
#include <cmath>

#include "gini/bounds/theta.hpp"
#include "gini/core/copula.hpp"

namespace gini {

ThetaReport upper_bound(const UnitPoint& p, const GammaTarget& t) {
  ThetaReport r{p, t, {}, {}, std::nullopt, 0.0, false};
  for (int i = 1; i <= 5; ++i) {
    r.theta[i - 1] = theta_candidate(i, p, t);
    r.active[i - 1] = region_contains(i, p, t);
    if (r.active[i - 1]) {
      const double th = *r.theta[i - 1];
      r.inner_max = r.inner_max ? std::max(*r.inner_max, th) : th;
    }
  }
  const double m = frechet_upper(p.u(), p.v());
  // u + v - 1 can round above min(u, v) on the top and right edges.
  const double w = std::min(frechet_lower(p.u(), p.v()), m);
  const double raw = r.inner_max ? std::min(m, *r.inner_max) : m;
  r.bound = std::clamp(raw, w, m);
  r.clamped = std::fabs(r.bound - raw) > kClampAlarm;
  return r;
}

double upper_bound_value(double u, double v, double t) {
  return upper_bound(UnitPoint(u, v), GammaTarget(t)).bound;
}

double lower_bound(const UnitPoint& p, const GammaTarget& t) {
  const double reflected = p.v() - upper_bound(UnitPoint(1.0 - p.u(), p.v()), t.negated()).bound;
  // Same rounding guard as the upper bound; moves values by float noise only.
  const double m = frechet_upper(p.u(), p.v());
  return std::clamp(reflected, std::min(frechet_lower(p.u(), p.v()), m), m);
}

double lower_bound_value(double u, double v, double t) {
  return lower_bound(UnitPoint(u, v), GammaTarget(t));
}

double active_theta_spread(const ThetaReport& report) {
  double lo = INFINITY;
  double hi = -INFINITY;
  int count = 0;
  for (int i = 0; i < 5; ++i) {
    if (!report.active[i]) continue;
    lo = std::min(lo, *report.theta[i]);
    hi = std::max(hi, *report.theta[i]);
    ++count;
  }
  return count < 2 ? 0.0 : hi - lo;
}

Bivariate upper_bound_fn(const GammaTarget& t) {
  return [t](double u, double v) { return upper_bound(UnitPoint(u, v), t).bound; };
}

Bivariate lower_bound_fn(const GammaTarget& t) {
  return [t](double u, double v) { return lower_bound(UnitPoint(u, v), t); };
}

}  // namespace gini
