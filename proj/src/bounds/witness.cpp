#include "gini/bounds/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gini/bounds/bound.hpp"
#include "gini/bounds/pointbound_gamma.hpp"
#include "gini/core/copula.hpp"
#include "gini/core/quadrature.hpp"

namespace gini {

namespace {
constexpr int kWitnessPanels = 4000;
constexpr double kGammaTol = 1e-6;
constexpr double kValueTol = 1e-9;
}  // namespace

double WitnessCopula::operator()(double u, double v) const {
  const double lower = lower_pointbound(base.a(), base.b(), base.theta(), u, v);
  return alpha == 0.0 ? lower : alpha * frechet_upper(u, v) + (1.0 - alpha) * lower;
}

Bivariate WitnessCopula::as_function() const {
  return [w = *this](double u, double v) { return w(u, v); };
}

WitnessCopula witness_copula(const UnitPoint& p, const GammaTarget& target) {
  const double u = p.u();
  const double v = p.v();
  const double t = target.value();
  const double w = frechet_lower(u, v);
  const double m = frechet_upper(u, v);
  const ThetaReport report = upper_bound(p, target);

  const double theta_star = report.inner_max.value_or(m);
  WitnessCopula out{PointBoundSpec(u, v, m), 0.0, 0.0, 0.0};
  bool direct = false;
  if (theta_star <= m) {
    const PointBoundSpec spec(u, v, std::clamp(theta_star, w, m));
    if (std::fabs(gamma_lower_pointbound(spec).value - t) <= 1e-9) {
      out.base = spec;
      direct = true;
    }
  }
  if (!direct) {
    // gamma is affine along alpha*M + (1-alpha)*C_lower_{(u,v),M}, with gamma(M) = 1.
    const double g0 = gamma_lower_pointbound(out.base).value;
    out.alpha = (1.0 - g0) > 1e-15 ? std::clamp((t - g0) / (1.0 - g0), 0.0, 1.0) : 0.0;
  }

  out.value = out(u, v);
  out.gamma = gamma_quadrature(out.as_function(), kWitnessPanels);
  if (std::fabs(out.gamma - t) > kGammaTol || std::fabs(out.value - report.bound) > kValueTol) {
    std::ostringstream os;
    os.precision(12);
    os << "witness_copula: verification failed at (u,v,t) = (" << u << ", " << v << ", " << t
       << "): gamma = " << out.gamma << ", C(u,v) = " << out.value
       << ", bound = " << report.bound << ", base theta = " << out.base.theta()
       << ", alpha = " << out.alpha;
    throw InternalError(os.str());
  }
  return out;
}

}  // namespace gini
