#pragma once

#include "gini/core/types.hpp"

namespace gini {

/// Gini's gamma 4 * int_0^1 [f(u,u) + f(u,1-u)] du - 2 by composite Simpson with
/// m panels (m even, m >= 2). Kinks of piecewise-linear copulas degrade the rate,
/// so certification uses m >= 2000.
double gamma_quadrature(const Bivariate& f, int m);

}  // namespace gini
