#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gini/core/types.hpp"

namespace gini {

/// Node values of a bivariate function on the uniform (N+1)x(N+1) lattice:
/// at(i, j) = f(i/N, j/N). Storage is row-major with i (the u index) outer.
class LatticeFunction {
 public:
  LatticeFunction(int cells, std::vector<double> values);

  int cells() const { return cells_; }
  std::size_t stride() const { return static_cast<std::size_t>(cells_) + 1; }
  double node(int i) const { return i == cells_ ? 1.0 : static_cast<double>(i) / cells_; }
  double at(int i, int j) const { return values_[i * stride() + j]; }
  const double* row(int i) const { return values_.data() + i * stride(); }
  const std::vector<double>& values() const { return values_; }

 private:
  int cells_;
  std::vector<double> values_;
};

/// Samples f on the lattice with N cells per axis; rows are filled in parallel.
LatticeFunction sample_lattice(const Bivariate& f, int cells);

struct PropertyReport {
  double boundary_max_err = 0.0;
  double monotonicity_min_step = 0.0;  // most negative forward difference
  double lipschitz_max_excess = 0.0;   // max |df| - du - dv over lattice edges
  double min_volume = 0.0;
  std::array<int, 4> min_volume_rect{};  // i0, i1, j0, j1
  bool is_quasicopula = false;
  bool is_copula = false;
};

/// Boundary conditions, monotonicity and the Lipschitz condition on lattice edges,
/// and 2-increasingness on single cells (exact for the bilinear interpolant).
PropertyReport check_properties(const LatticeFunction& g, double tol);

/// CSV with header `u,v,value`, row-major, 12 significant digits, LF endings.
void write_lattice_csv(std::ostream& out, const LatticeFunction& g);
LatticeFunction read_lattice_csv(std::istream& in);

/// Formats x with 12 significant digits (the project-wide output precision).
std::string format12(double x);

}  // namespace gini
