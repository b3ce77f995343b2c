#include "gini/oracle/lp_extreme.hpp"

#include <cmath>
#include <sstream>

#include "gini/oracle/simplex.hpp"

namespace gini::oracle {

std::string_view to_string(Direction d) { return d == Direction::Min ? "min" : "max"; }
std::string_view to_string(LpStatus s) { return s == LpStatus::Optimal ? "optimal" : "infeasible"; }

namespace {

// Variables y_ij = n * mass_ij form a doubly stochastic matrix: unit row and
// column sums keep the tableau well scaled.
LinearProgram margin_program(int n) {
  const std::size_t vars = static_cast<std::size_t>(n) * n;
  LinearProgram lp;
  lp.rows = 2 * static_cast<std::size_t>(n);
  lp.cols = vars;
  lp.a.assign(lp.rows * vars, 0.0);
  lp.b.assign(lp.rows, 1.0);
  lp.c.assign(vars, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      lp.a[static_cast<std::size_t>(i) * vars + k] = 1.0;
      lp.a[static_cast<std::size_t>(n + j) * vars + k] = 1.0;
    }
  }
  return lp;
}

SimplexOptions options_for(int n) {
  SimplexOptions opt;
  opt.iteration_cap = 10L * n * n * n * n;
  return opt;
}

Checkerboard to_checkerboard(int n, const std::vector<double>& y) {
  std::vector<double> mass(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) mass[k] = y[k] > 0.0 ? y[k] / n : 0.0;
  return Checkerboard(n, std::move(mass));
}

void require_order(int n, const char* who) {
  if (n < 2) throw DomainError(std::string(who) + ": order must be >= 2");
}

}  // namespace

LpOutcome lp_extreme(int n, const UnitPoint& p, const GammaTarget& target, Direction direction) {
  require_order(n, "lp_extreme");
  const double t = target.value();
  LinearProgram lp = margin_program(n);
  const auto g = gamma_coefficients(n);
  const std::size_t vars = lp.cols;

  // gamma equality: sum g_ij mass_ij = t + 2, i.e. sum g_ij y_ij = n (t + 2).
  lp.a.resize((lp.rows + 1) * vars);
  for (std::size_t k = 0; k < vars; ++k) lp.a[lp.rows * vars + k] = g[k];
  lp.b.push_back(n * (t + 2.0));
  ++lp.rows;

  const auto fu = overlap_fractions(n, p.u());
  const auto fv = overlap_fractions(n, p.v());
  const double sign = direction == Direction::Min ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lp.c[static_cast<std::size_t>(i) * n + j] = sign * fu[i] * fv[j] / n;
  }

  const SimplexResult res = solve_simplex(lp, options_for(n));
  LpOutcome out;
  out.direction = direction;
  out.iterations = res.iterations;
  if (res.status == SimplexStatus::Infeasible) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  if (res.status != SimplexStatus::Optimal) {
    std::ostringstream os;
    os << "lp_extreme: simplex stopped without optimum after " << res.iterations
       << " pivots (n = " << n << ", t = " << t << ")";
    throw InternalError(os.str());
  }
  Checkerboard cb = to_checkerboard(n, res.x);
  const double gamma = gamma_checkerboard_exact(cb);
  if (std::fabs(gamma - t) > kGammaEqualityTol) {
    std::ostringstream os;
    os.precision(15);
    os << "lp_extreme: optimal argument has gamma " << gamma << ", expected " << t;
    throw InternalError(os.str());
  }
  out.status = LpStatus::Optimal;
  out.optimum = checkerboard_eval(cb, p);
  out.argument = std::move(cb);
  return out;
}

std::pair<double, double> gamma_range(int n) {
  require_order(n, "gamma_range");
  LinearProgram lp = margin_program(n);
  const auto g = gamma_coefficients(n);
  double bounds[2] = {0.0, 0.0};
  for (int pass = 0; pass < 2; ++pass) {
    const double sign = pass == 0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < lp.cols; ++k) lp.c[k] = sign * g[k] / n;
    const SimplexResult res = solve_simplex(lp, options_for(n));
    if (res.status != SimplexStatus::Optimal) {
      throw InternalError("gamma_range: simplex failed for n = " + std::to_string(n));
    }
    bounds[pass] = gamma_checkerboard_exact(to_checkerboard(n, res.x));
  }
  return {bounds[0], bounds[1]};
}

}  // namespace gini::oracle
