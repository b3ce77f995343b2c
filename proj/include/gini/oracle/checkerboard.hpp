#pragma once

#include <iosfwd>
#include <vector>

#include "gini/core/types.hpp"

namespace gini::oracle {

/// Margin tolerance for checkerboard row and column sums.
inline constexpr double kMarginTol = 1e-12;

/// Copula with constant density on each cell of the uniform n x n partition.
/// mass(i, j) is the mass of [i/n, (i+1)/n] x [j/n, (j+1)/n]; every row and column
/// sums to 1/n.
class Checkerboard {
 public:
  Checkerboard(int n, std::vector<double> mass);

  int order() const { return n_; }
  double mass(int i, int j) const { return mass_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& masses() const { return mass_; }

 private:
  int n_;
  std::vector<double> mass_;
};

/// Fraction of cell k of an n-partition covered by [0, x]: clamp(n x - k, 0, 1).
std::vector<double> overlap_fractions(int n, double x);

double checkerboard_eval(const Checkerboard& cb, const UnitPoint& p);
Bivariate checkerboard_fn(const Checkerboard& cb);

/// Row-major n x n matrix g with gamma(cb) = sum_ij g_ij mass_ij - 2, from exact
/// integration of the bilinear cell CDFs along v = u and v = 1 - u.
std::vector<double> gamma_coefficients(int n);

double gamma_checkerboard_exact(const Checkerboard& cb);

/// JSON `{"n": n, "mass": [n*n reals, row-major]}`; margins are validated on load.
Checkerboard read_checkerboard_json(std::istream& in);
void write_checkerboard_json(std::ostream& out, const Checkerboard& cb);

}  // namespace gini::oracle
