#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace gini {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal consistency check fails (a logic bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A point of the unit square. Construction rejects coordinates outside [0,1].
class UnitPoint {
 public:
  UnitPoint(double u, double v) : u_(u), v_(v) {
    if (!(u >= 0.0 && u <= 1.0) || !(v >= 0.0 && v <= 1.0)) {
      throw DomainError("UnitPoint: coordinates must lie in [0,1], got (" +
                        std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }

  double u() const { return u_; }
  double v() const { return v_; }
  double hi() const { return u_ < v_ ? v_ : u_; }
  double lo() const { return u_ < v_ ? u_ : v_; }

 private:
  double u_;
  double v_;
};

/// Prescribed copula value theta at the point (a,b).
/// Requires max(0, a+b-1) <= theta <= min(a,b); violations are rejected, not clamped.
/// Rounding allowance on the Frechet inequalities for theta; accepted values
/// are snapped into [W(a,b), M(a,b)].
inline constexpr double kSpecTol = 1e-12;

class PointBoundSpec {
 public:
  PointBoundSpec(double a, double b, double theta);

  double a() const { return a_; }
  double b() const { return b_; }
  double theta() const { return theta_; }

 private:
  double a_;
  double b_;
  double theta_;
};

/// A target value of Gini's gamma, t in [-1,1].
class GammaTarget {
 public:
  explicit GammaTarget(double t) : t_(t) {
    if (!(t >= -1.0 && t <= 1.0)) {
      throw DomainError("GammaTarget: t must lie in [-1,1], got " + std::to_string(t));
    }
  }

  double value() const { return t_; }
  GammaTarget negated() const { return GammaTarget(-t_); }

 private:
  double t_;
};

/// Any real function on the unit square; callers pass (u,v) in [0,1]^2.
using Bivariate = std::function<double(double, double)>;

}  // namespace gini
