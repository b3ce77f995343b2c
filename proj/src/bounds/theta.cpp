#include "gini/bounds/theta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gini/bounds/pointbound_gamma.hpp"
#include "gini/core/copula.hpp"

namespace gini {

namespace {

void check_index(int i, const char* who) {
  if (i < 1 || i > 5) throw DomainError(std::string(who) + ": region index must be 1..5");
}

// Each theta_i has the form (s + sqrt(s^2 + e)) / k. Where s < 0 the sum cancels,
// so the conjugate e / (k (sqrt(s^2 + e) - s)) is used; it is exact when e = 0.
std::optional<double> largest_root(double s, double e, double k) {
  const double radicand = s * s + e;
  if (radicand < 0.0) return std::nullopt;
  const double r = std::sqrt(radicand);
  if (s < 0.0) return e / (k * (r - s));
  return (s + r) / k;
}

}  // namespace

std::optional<double> theta_candidate(int i, const UnitPoint& p, const GammaTarget& target) {
  check_index(i, "theta_candidate");
  // Ordered coordinates keep the result bitwise symmetric in (u, v).
  const double hi = p.hi();
  const double lo = p.lo();
  const double t = target.value();
  switch (i) {
    case 1:
      return largest_root(hi + lo - 1.0, t + 1.0, 2.0);
    case 2:
      return largest_root(3.0 * hi + lo - 2.0, 2.0 * (4.0 * hi * (1.0 - hi) + t), 4.0);
    case 3:
      return largest_root(4.0 * hi + 2.0 * lo - 3.0, 7.0 * (t + 1.0), 7.0);
    case 4:
      return largest_root(5.0 * hi + 3.0 * lo - 4.0,
                          7.0 * (-3.0 * hi * hi + lo * lo + 4.0 * hi - 2.0 * hi * lo + t), 7.0);
    default:
      return largest_root(3.0 * (hi + lo - 1.0), 6.0 * ((hi - lo) * (hi - lo) + t + 1.0), 6.0);
  }
}

bool region_contains(int i, const UnitPoint& p, const GammaTarget& t) {
  check_index(i, "region_contains");
  const auto theta = theta_candidate(i, p, t);
  if (!theta) return false;
  const double w = frechet_lower(p.u(), p.v());
  const double m = frechet_upper(p.u(), p.v());
  if (*theta < w - kRegionSlack || *theta > m + kRegionSlack) return false;
  return gamma_branch_condition(i, p.hi(), p.lo(), *theta, kRegionSlack);
}

bool explicit_region_inequalities_hold(int i, const UnitPoint& p, const GammaTarget& target) {
  check_index(i, "explicit_region_inequalities_hold");
  const double hi = p.hi();
  const double m = p.lo();
  const double t = target.value();
  double lower = -INFINITY;
  double upper = INFINITY;
  bool violated = false;
  // A missing lower curve cannot be exceeded; a missing ratio bound is non-binding.
  auto at_least = [&](std::optional<double> x, bool is_curve) {
    if (x) {
      lower = std::max(lower, *x);
    } else if (is_curve) {
      violated = true;
    }
  };
  auto at_most = [&](std::optional<double> x) {
    if (x) upper = std::min(upper, *x);
  };
  auto ratio = [](double num, double den) -> std::optional<double> {
    if (den == 0.0) return std::nullopt;
    return num / den;
  };
  auto curve = [](double radicand, auto&& shape) -> std::optional<double> {
    if (radicand < 0.0) return std::nullopt;
    return shape(std::sqrt(radicand));
  };

  switch (i) {
    case 1:
      if (m > 0.5) return false;
      at_least(ratio(2.0 * m - t - 2.0, 4.0 * m - 2.0), false);
      if (m > 0.0) at_most(1.0 - (1.0 + t) / (4.0 * m));
      break;
    case 2:
      at_least(ratio(12.0 * m * m - 8.0 * m - t, 8.0 * m - 4.0), false);
      at_least(curve(4.0 * m * m - 4.0 * m + 3.0 * t + 4.0,
                     [m](double r) { return (2.0 * m + 2.0 + r) / 6.0; }),
               true);
      at_most(ratio(2.0 * m - t - 2.0, 4.0 * m - 2.0));
      at_most(curve(5.0 * m * m - 2.0 * m + t + 1.0,
                    [m](double r) { return (3.0 * m + 1.0 - r) / 2.0; }));
      break;
    case 3:
      at_least(curve(36.0 * m * m - 36.0 * m - t + 8.0,
                     [m](double r) { return 3.0 - 5.0 * m - r; }),
               true);
      at_most(ratio(3.0 * m * m + 6.0 * m - t - 1.0, 8.0 * m));
      at_most(curve(4.0 * m * m - 4.0 * m + 3.0 * t + 4.0,
                    [m](double r) { return (2.0 * m + 2.0 + r) / 6.0; }));
      break;
    case 4:
      at_least(curve(9.0 * (2.0 * m - 1.0) * (2.0 * m - 1.0) + 11.0 * (t + 1.0),
                     [m](double r) { return (5.0 * m + 3.0 + r) / 11.0; }),
               true);
      at_most(ratio(12.0 * m * m - 8.0 * m - t, 8.0 * m - 4.0));
      at_most(curve(16.0 * m * m - 8.0 * m + 3.0 * t + 4.0,
                    [m](double r) { return (4.0 * m + 2.0 - r) / 3.0; }));
      break;
    default:
      at_most(curve(36.0 * m * m - 36.0 * m - t + 8.0,
                    [m](double r) { return 3.0 - 5.0 * m - r; }));
      at_most(curve(9.0 * (2.0 * m - 1.0) * (2.0 * m - 1.0) + 11.0 * (t + 1.0),
                    [m](double r) { return (5.0 * m + 3.0 + r) / 11.0; }));
      at_most(curve(3.0 * m * (m + 2.0) - (t + 1.0), [m](double r) { return -2.0 * m + r; }));
      break;
  }
  return !violated && lower <= hi && hi <= upper;
}

bool region_nonempty(int i, const GammaTarget& t, int samples) {
  check_index(i, "region_nonempty");
  if (samples < 10000) throw DomainError("region_nonempty: need samples >= 1e4");
  // Regions are symmetric, so the half-lattice u <= v suffices; size it so the
  // full lattice has at least `samples` points.
  const int n = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples)))) - 1;
  for (int a = 0; a <= n; ++a) {
    const double u = static_cast<double>(a) / n;
    for (int b = a; b <= n; ++b) {
      if (region_contains(i, UnitPoint(u, static_cast<double>(b) / n), t)) return true;
    }
  }
  return false;
}

}  // namespace gini
