#pragma once

#include "gini/core/types.hpp"

namespace gini {

inline double frechet_lower(double u, double v) {
  const double s = u + v - 1.0;
  return s > 0.0 ? s : 0.0;
}
inline double frechet_upper(double u, double v) { return u < v ? u : v; }
inline double product(double u, double v) { return u * v; }

double eval_frechet_lower(const UnitPoint& p);
double eval_frechet_upper(const UnitPoint& p);
double eval_product(const UnitPoint& p);

/// max(0, u+v-1, theta - (a-u)^+ - (b-v)^+): the smallest copula with C(a,b) = theta.
double eval_lower_pointbound(const PointBoundSpec& spec, const UnitPoint& p);
/// min(u, v, theta + (u-a)^+ + (v-b)^+): the largest copula with C(a,b) = theta.
double eval_upper_pointbound(const PointBoundSpec& spec, const UnitPoint& p);

// Unchecked kernels behind the evaluators above; the spec is assumed valid.
double lower_pointbound(double a, double b, double theta, double u, double v);
double upper_pointbound(double a, double b, double theta, double u, double v);

Bivariate lower_pointbound_fn(const PointBoundSpec& spec);
Bivariate upper_pointbound_fn(const PointBoundSpec& spec);

/// f(u2,v2) - f(u2,v1) - f(u1,v2) + f(u1,v1). Throws DomainError on an inverted
/// or out-of-range rectangle.
double rect_volume(const Bivariate& f, double u1, double u2, double v1, double v2);

/// (u,v) -> v - f(1-u, v): the copula of (1-X, Y) when f is the copula of (X, Y).
Bivariate reflect_first_coordinate(Bivariate f);

}  // namespace gini
