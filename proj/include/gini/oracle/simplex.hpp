#pragma once

#include <cstddef>
#include <vector>

namespace gini::oracle {

/// minimize c^T x subject to A x = b, x >= 0. A is row-major rows x cols.
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::IterationLimit;
  std::vector<double> x;
  double objective = 0.0;
  long iterations = 0;
};

struct SimplexOptions {
  long iteration_cap = 1'000'000;
  double pivot_tol = 1e-11;
  double cost_tol = 1e-11;
  double feasibility_tol = 1e-9;
  // Consecutive degenerate pivots (step <= degenerate_step) before switching to Bland.
  long degenerate_switch = 50;
  double degenerate_step = 1e-12;
};

/// Dense two-phase tableau simplex. Entering columns are priced by Dantzig's rule;
/// during runs of degenerate pivots Bland's smallest-index rule takes over for
/// both the entering and the leaving variable, which rules out cycling.
SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace gini::oracle
