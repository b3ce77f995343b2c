#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "gini/bounds/bound.hpp"
#include "gini/core/lattice.hpp"
#include "gini/core/quadrature.hpp"
#include "gini/oracle/checkerboard.hpp"
#include "gini/oracle/lp_extreme.hpp"
#include "gini/oracle/simplex.hpp"
#include "support/oracles.hpp"

using namespace gini;
using namespace gini::oracle;
using doctest::Approx;

namespace {

Checkerboard diagonal(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1.0 / n;
  return Checkerboard(n, m);
}

Checkerboard anti_diagonal(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + (n - 1 - i)] = 1.0 / n;
  return Checkerboard(n, m);
}

// C(u,v) by summing the uniform density over a fine midpoint grid.
double dense_cdf(const Checkerboard& cb, double u, double v, int k) {
  const int n = cb.order();
  double sum = 0.0;
  for (int a = 0; a < k; ++a) {
    const double x = (a + 0.5) / k;
    if (x > u) break;
    for (int b = 0; b < k; ++b) {
      const double y = (b + 0.5) / k;
      if (y > v) break;
      sum += cb.mass(std::min(int(x * n), n - 1), std::min(int(y * n), n - 1)) * n * n;
    }
  }
  return sum / (double(k) * k);
}

}  // namespace

TEST_CASE("checkerboard evaluation") {
  const Checkerboard pi(1, {1.0});
  for (double u : {0.0, 0.3, 0.8, 1.0}) {
    for (double v : {0.0, 0.4, 1.0}) CHECK(checkerboard_eval(pi, UnitPoint(u, v)) == Approx(u * v));
  }
  const auto d = diagonal(2);
  CHECK(checkerboard_eval(d, UnitPoint(0.5, 0.5)) == Approx(0.5));
  CHECK(checkerboard_eval(d, UnitPoint(0.25, 0.75)) == Approx(0.25));
  CHECK(dense_cdf(d, 0.25, 0.75, 400) == Approx(0.25).epsilon(1e-9));

  std::mt19937_64 rng(1);
  const Checkerboard r(5, testing::random_checkerboard_mass(5, rng));
  for (double u : {0.13, 0.5, 0.77}) {
    for (double v : {0.21, 0.6, 0.93}) {
      CHECK(checkerboard_eval(r, UnitPoint(u, v)) == Approx(dense_cdf(r, u, v, 2000)).epsilon(2e-3));
    }
  }
}

TEST_CASE("checkerboard validation") {
  CHECK_THROWS_AS(Checkerboard(2, {0.5, 0.0, 0.0, 0.4}), DomainError);
  CHECK_THROWS_AS(Checkerboard(2, {0.6, -0.1, -0.1, 0.6}), DomainError);
  CHECK_THROWS_AS(Checkerboard(2, {0.5, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(Checkerboard(0, {}), DomainError);
}

TEST_CASE("gamma coefficients") {
  CHECK(gamma_checkerboard_exact(Checkerboard(1, {1.0})) == Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(gamma_checkerboard_exact(diagonal(2)) == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(gamma_checkerboard_exact(anti_diagonal(2)) == Approx(-2.0 / 3.0).epsilon(1e-12));
  for (int n : {1, 2, 3, 7}) {
    CHECK(gamma_checkerboard_exact(diagonal(n)) ==
          Approx(gamma_quadrature(checkerboard_fn(diagonal(n)), 4000)).epsilon(1e-8).scale(1.0));
  }
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k) {
    // Simpson is exact on each panel pair when the cell edges fall on even nodes; for
    // n = 3 and 11 the kinks fall inside a panel and only O(h^2) agreement is expected.
    for (int n : {3, 5, 8, 11, 16}) {
      const double tol = 2000 % n == 0 ? 1e-8 : 1e-6;
      const Checkerboard cb(n, testing::random_checkerboard_mass(n, rng));
      const double exact = gamma_checkerboard_exact(cb);
      CHECK(exact == Approx(gamma_quadrature(checkerboard_fn(cb), 4000)).epsilon(tol).scale(1.0));
      CHECK(exact == Approx(testing::reference_gamma(checkerboard_fn(cb), 4000)).epsilon(tol).scale(1.0));
    }
  }
}

TEST_CASE("checkerboard JSON round trip") {
  std::mt19937_64 rng(3);
  const Checkerboard cb(4, testing::random_checkerboard_mass(4, rng));
  std::stringstream buf;
  write_checkerboard_json(buf, cb);
  const auto back = read_checkerboard_json(buf);
  CHECK(back.order() == 4);
  for (std::size_t k = 0; k < 16; ++k) CHECK(back.masses()[k] == cb.masses()[k]);
  std::istringstream bad(R"({"n": 2, "mass": [1, 0, 0, 0]})");
  CHECK_THROWS_AS(read_checkerboard_json(bad), DomainError);
}

TEST_CASE("simplex on small programs") {
  // min -x1 - x2  s.t. x1 + s1 = 1, x2 + s2 = 2
  LinearProgram lp{2, 4, {1, 0, 1, 0, 0, 1, 0, 1}, {1, 2}, {-1, -1, 0, 0}};
  auto r = solve_simplex(lp);
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == Approx(-3.0));

  LinearProgram infeasible{1, 1, {1}, {-1}, {0}};
  CHECK(solve_simplex(infeasible).status == SimplexStatus::Infeasible);

  LinearProgram unbounded{1, 2, {1, -1}, {0}, {-1, 0}};
  CHECK(solve_simplex(unbounded).status == SimplexStatus::Unbounded);

  // Redundant equality rows.
  LinearProgram redundant{2, 2, {1, 1, 2, 2}, {1, 2}, {1, 2}};
  r = solve_simplex(redundant);
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == Approx(1.0));
}

TEST_CASE("simplex terminates on a cycling-prone degenerate program") {
  // A variant of Beale's degenerate example, the textbook setting for cycling.
  // Optimum -1.25 cross-checked with an external LP solver.
  // Columns x1..x3 are slacks, x4..x7 the structural variables.
  LinearProgram beale{3, 7,
                      {1, 0, 0, 0.25, -8, -1, 9,     //
                       0, 1, 0, 0.5, -12, -0.5, 3,   //
                       0, 0, 1, 0, 0, 1, 0},
                      {0, 0, 1},
                      {0, 0, 0, -0.75, 20, -0.5, 6}};
  for (long sw : {0L, 1L, 50L}) {
    SimplexOptions opt;
    opt.degenerate_switch = sw;
    opt.iteration_cap = 1000;
    const auto r = solve_simplex(beale, opt);
    CAPTURE(sw);
    CHECK(r.status == SimplexStatus::Optimal);
    CHECK(r.objective == Approx(-1.25));  // x4 = x6 = 1
  }
}

TEST_CASE("LP extreme at order 2") {
  auto out = lp_extreme(2, UnitPoint(0.5, 0.5), GammaTarget(2.0 / 3.0), Direction::Max);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == Approx(0.5).epsilon(1e-9));

  // The order-2 family is mass [[a, 1/2 - a], [1/2 - a, a]], a in [0, 1/2].
  out = lp_extreme(2, UnitPoint(0.5, 0.5), GammaTarget(0.0), Direction::Max);
  REQUIRE(out.status == LpStatus::Optimal);
  double brute = -1.0;
  for (int k = 0; k <= 100000; ++k) {
    const double a = 0.5 * k / 100000.0;
    const Checkerboard cb(2, {a, 0.5 - a, 0.5 - a, a});
    if (std::fabs(gamma_checkerboard_exact(cb)) < 1e-5) brute = std::max(brute, checkerboard_eval(cb, UnitPoint(0.5, 0.5)));
  }
  CHECK(out.optimum == Approx(brute).epsilon(1e-4));
  CHECK(out.optimum <= std::sqrt(6.0) / 6.0 + 1e-9);

  CHECK(lp_extreme(2, UnitPoint(0.5, 0.5), GammaTarget(0.9), Direction::Max).status == LpStatus::Infeasible);
  const auto range = gamma_range(2);
  CHECK(range.first == Approx(-2.0 / 3.0));
  CHECK(range.second == Approx(2.0 / 3.0));
  CHECK_THROWS_AS(lp_extreme(1, UnitPoint(0.5, 0.5), GammaTarget(0.0), Direction::Max), DomainError);
}

TEST_CASE("LP extreme at order 16 approaches the closed form from below") {
  const double g = std::sqrt(6.0) / 6.0;
  const auto out = lp_extreme(16, UnitPoint(0.5, 0.5), GammaTarget(0.0), Direction::Max);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum <= g + 1e-9);
  CHECK(out.optimum >= g - 0.15);
  REQUIRE(out.argument.has_value());
  CHECK(std::fabs(gamma_checkerboard_exact(*out.argument)) <= kGammaEqualityTol);
  CHECK(check_properties(sample_lattice(checkerboard_fn(*out.argument), 128), 1e-12).is_copula);
}

TEST_CASE("LP maximum at the centre for t = 0 increases with the order") {
  // Reference optima from an independent LP solver.
  const std::pair<int, double> expected[] = {{4, 0.375}, {8, 0.4}, {16, 0.405172413793}, {32, 0.407291666667}};
  for (const auto& [n, value] : expected) {
    const auto out = lp_extreme(n, UnitPoint(0.5, 0.5), GammaTarget(0.0), Direction::Max);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.optimum == Approx(value).epsilon(1e-9));
  }
}

TEST_CASE("LP soundness against the closed-form bounds") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  std::uniform_real_distribution<double> tdist(-0.6, 0.6);
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 7;
    const double u = unit(rng);
    const double v = unit(rng);
    const double t = tdist(rng);
    const auto hi = lp_extreme(n, UnitPoint(u, v), GammaTarget(t), Direction::Max);
    const auto lo = lp_extreme(n, UnitPoint(u, v), GammaTarget(t), Direction::Min);
    CHECK(hi.status == lo.status);
    if (hi.status != LpStatus::Optimal) continue;
    CHECK(hi.optimum <= upper_bound_value(u, v, t) + 1e-9);
    CHECK(lo.optimum >= lower_bound_value(u, v, t) - 1e-9);
    CHECK(lo.optimum <= hi.optimum + 1e-12);
    CHECK(std::fabs(gamma_checkerboard_exact(*hi.argument) - t) <= kGammaEqualityTol);
    CHECK(check_properties(sample_lattice(checkerboard_fn(*lo.argument), 4 * n), 1e-12).is_copula);
  }
}

TEST_CASE("LP reflection duality and symmetric gamma range") {
  for (int n : {3, 4, 6}) {
    for (const auto& [u, v, t] : {std::tuple{0.3, 0.7, -0.2}, std::tuple{0.55, 0.4, 0.1}}) {
      const auto lo = lp_extreme(n, UnitPoint(u, v), GammaTarget(t), Direction::Min);
      const auto hi = lp_extreme(n, UnitPoint(1.0 - u, v), GammaTarget(-t), Direction::Max);
      REQUIRE(lo.status == LpStatus::Optimal);
      REQUIRE(hi.status == LpStatus::Optimal);
      CHECK(lo.optimum == Approx(v - hi.optimum).epsilon(1e-9).scale(1.0));
    }
    const auto range = gamma_range(n);
    CHECK(range.first == Approx(-range.second).epsilon(1e-9));
  }
}

TEST_CASE("LP gap to the closed-form bound shrinks with the order on an interior grid") {
  for (double t : {-0.5, 0.0, 0.25}) {
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const UnitPoint p(i / 6.0, j / 6.0);
        const double bound = upper_bound(p, GammaTarget(t)).bound;
        double prev = INFINITY;
        double gap = 0.0;
        for (int n : {4, 8, 16, 32}) {
          const auto out = lp_extreme(n, p, GammaTarget(t), Direction::Max);
          REQUIRE(out.status == LpStatus::Optimal);
          gap = bound - out.optimum;
          CAPTURE(t);
          CAPTURE(p.u());
          CAPTURE(p.v());
          CAPTURE(n);
          CHECK(gap >= -1e-9);
          CHECK(gap <= prev + 1e-9);
          prev = gap;
        }
        CHECK(gap < 0.1);
      }
    }
  }
}
