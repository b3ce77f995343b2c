#include "gini/bounds/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gini {

std::string_view to_string(BoundClassification c) {
  switch (c) {
    case BoundClassification::FrechetLower:
      return "FrechetLower";
    case BoundClassification::ProperQuasiCopula:
      return "ProperQuasiCopula";
    case BoundClassification::ProperCopulaStrict:
      return "ProperCopulaStrict";
    case BoundClassification::FrechetUpper:
      return "FrechetUpper";
  }
  return "?";
}

BoundClassification classify_upper(const GammaTarget& target) {
  const double t = target.value();
  if (t == -1.0) return BoundClassification::FrechetLower;
  if (t < 0.0) return BoundClassification::ProperQuasiCopula;
  if (t < 0.5) return BoundClassification::ProperCopulaStrict;
  return BoundClassification::FrechetUpper;
}

BoundClassification classify_lower(const GammaTarget& target) {
  const double t = target.value();
  if (t == 1.0) return BoundClassification::FrechetUpper;
  if (t > 0.0) return BoundClassification::ProperQuasiCopula;
  if (t > -0.5) return BoundClassification::ProperCopulaStrict;
  return BoundClassification::FrechetLower;
}

namespace {

double hyperbolic_lhs(double u, double v) {
  const double s = u + v;
  return s * s + 2.0 * u * v - 6.0 * std::min(u, v);
}

}  // namespace

bool hyperbolic_set_contains(const UnitPoint& p, const GammaTarget& t) {
  return hyperbolic_lhs(p.u(), p.v()) <= -1.0 - t.value();
}

std::pair<UnitPoint, UnitPoint> hyperbolic_corner_points(const GammaTarget& target) {
  const double t = target.value();
  if (t > 0.5) {
    std::ostringstream os;
    os << "hyperbolic_corner_points: needs t <= 1/2 (radicand 3-6t >= 0), got t = " << t;
    throw DomainError(os.str());
  }
  const double r = std::sqrt(3.0 - 6.0 * t);
  const double c1 = (3.0 + r) / 6.0;
  const double c2 = (3.0 - r) / 6.0;
  return {UnitPoint(c1, c1), UnitPoint(c2, c2)};
}

double mixed_partial_in_S(const UnitPoint& p, const GammaTarget& target) {
  const double u = p.u();
  const double v = p.v();
  const double t = target.value();
  if (hyperbolic_lhs(u, v) > -1.0 - t + 1e-12) {
    std::ostringstream os;
    os << "mixed_partial_in_S: (" << u << ", " << v << ") lies outside the closure of S for t = "
       << t;
    throw DomainError(os.str());
  }
  const double q = 5.0 * u * u + 5.0 * v * v - 6.0 * u - 6.0 * v + 2.0 * u * v + 2.0 * t + 5.0;
  const double factor = t - 12.0 * u * v + 6.0 * u + 6.0 * v - 2.0;
  return std::sqrt(3.0) * factor / (3.0 * q * std::sqrt(q));
}

}  // namespace gini
