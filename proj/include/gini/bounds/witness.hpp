#pragma once

#include "gini/core/types.hpp"

namespace gini {

/// A copula attaining the upper bound at a point: alpha*M + (1-alpha)*C_lower_base.
struct WitnessCopula {
  PointBoundSpec base;
  double alpha = 0.0;
  double gamma = 0.0;  // by quadrature, verified against t
  double value = 0.0;  // C(u,v) at the requested point

  double operator()(double u, double v) const;
  Bivariate as_function() const;
};

/// Builds a copula C with gamma(C) = t (within 1e-6 by quadrature) and
/// C(u,v) = upper bound at (u,v) (within 1e-9). Throws InternalError when the
/// construction fails its own verification.
WitnessCopula witness_copula(const UnitPoint& p, const GammaTarget& t);

}  // namespace gini
