#include "gini/core/copula.hpp"

#include <algorithm>
#include <sstream>

namespace gini {

PointBoundSpec::PointBoundSpec(double a, double b, double theta) : a_(a), b_(b), theta_(theta) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    std::ostringstream os;
    os << "PointBoundSpec: (a,b) = (" << a << ", " << b << ") is outside the unit square";
    throw DomainError(os.str());
  }
  const double w = frechet_lower(a, b);
  const double m = frechet_upper(a, b);
  if (!(theta >= w - kSpecTol)) {
    std::ostringstream os;
    os << "PointBoundSpec: theta = " << theta << " violates W(a,b) <= theta, W(" << a << ", " << b
       << ") = " << w;
    throw DomainError(os.str());
  }
  if (!(theta <= m + kSpecTol)) {
    std::ostringstream os;
    os << "PointBoundSpec: theta = " << theta << " violates theta <= M(a,b), M(" << a << ", " << b
       << ") = " << m;
    throw DomainError(os.str());
  }
  theta_ = std::clamp(theta, w, m);
}

double eval_frechet_lower(const UnitPoint& p) { return frechet_lower(p.u(), p.v()); }
double eval_frechet_upper(const UnitPoint& p) { return frechet_upper(p.u(), p.v()); }
double eval_product(const UnitPoint& p) { return product(p.u(), p.v()); }

namespace {
inline double pos(double x) { return x > 0.0 ? x : 0.0; }
}  // namespace

double lower_pointbound(double a, double b, double theta, double u, double v) {
  return std::max({0.0, u + v - 1.0, theta - pos(a - u) - pos(b - v)});
}

double upper_pointbound(double a, double b, double theta, double u, double v) {
  return std::min({u, v, theta + pos(u - a) + pos(v - b)});
}

double eval_lower_pointbound(const PointBoundSpec& spec, const UnitPoint& p) {
  return lower_pointbound(spec.a(), spec.b(), spec.theta(), p.u(), p.v());
}

double eval_upper_pointbound(const PointBoundSpec& spec, const UnitPoint& p) {
  return upper_pointbound(spec.a(), spec.b(), spec.theta(), p.u(), p.v());
}

Bivariate lower_pointbound_fn(const PointBoundSpec& spec) {
  return [a = spec.a(), b = spec.b(), th = spec.theta()](double u, double v) {
    return lower_pointbound(a, b, th, u, v);
  };
}

Bivariate upper_pointbound_fn(const PointBoundSpec& spec) {
  return [a = spec.a(), b = spec.b(), th = spec.theta()](double u, double v) {
    return upper_pointbound(a, b, th, u, v);
  };
}

double rect_volume(const Bivariate& f, double u1, double u2, double v1, double v2) {
  const bool in_range = u1 >= 0.0 && u2 <= 1.0 && v1 >= 0.0 && v2 <= 1.0;
  if (!in_range || !(u1 <= u2) || !(v1 <= v2)) {
    std::ostringstream os;
    os << "rect_volume: need 0 <= u1 <= u2 <= 1 and 0 <= v1 <= v2 <= 1, got [" << u1 << ", " << u2
       << "] x [" << v1 << ", " << v2 << "]";
    throw DomainError(os.str());
  }
  return f(u2, v2) - f(u2, v1) - f(u1, v2) + f(u1, v1);
}

Bivariate reflect_first_coordinate(Bivariate f) {
  return [f = std::move(f)](double u, double v) { return v - f(1.0 - u, v); };
}

}  // namespace gini
