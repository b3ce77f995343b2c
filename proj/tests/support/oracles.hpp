#pragma once

// Test-only reference computations. None of these call into the code paths they
// are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace gini::testing {

/// Plain composite Simpson for gamma, written independently of gamma_quadrature.
inline double reference_gamma(const std::function<double(double, double)>& f, int m) {
  const double h = 1.0 / m;
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double u = k * h;
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    sum += w * (f(u, u) + f(u, 1.0 - u));
  }
  return 4.0 * sum * h / 3.0 - 2.0;
}

/// Lower point-bound copula, restated.
inline double reference_lower_pointbound(double a, double b, double th, double u, double v) {
  double x = th;
  if (a > u) x -= a - u;
  if (b > v) x -= b - v;
  return std::max(std::max(0.0, u + v - 1.0), x);
}

/// Largest root of alpha x^2 + beta x + gamma0 = 0 (alpha > 0).
inline double largest_root(double alpha, double beta, double gamma0) {
  const double disc = beta * beta - 4.0 * alpha * gamma0;
  return (-beta + std::sqrt(disc)) / (2.0 * alpha);
}

/// Supremum of theta in [W, M] with gamma_fn(theta) <= t, by bisection.
/// gamma_fn must be nondecreasing in theta.
inline double bisect_sup(double w, double m, double t, const std::function<double(double)>& gamma_fn,
                         int steps = 80) {
  if (gamma_fn(m) <= t) return m;
  double lo = w;
  double hi = m;
  for (int k = 0; k < steps; ++k) {
    const double mid = 0.5 * (lo + hi);
    (gamma_fn(mid) <= t ? lo : hi) = mid;
  }
  return lo;
}

/// Central finite-difference mixed partial.
inline double mixed_fd(const std::function<double(double, double)>& f, double u, double v, double h) {
  return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4.0 * h * h);
}

/// Random doubly stochastic-scaled mass matrix (rows and columns sum to 1/n) as a
/// convex combination of random permutation matrices.
inline std::vector<double> random_checkerboard_mass(int n, std::mt19937_64& rng, int terms = 6) {
  std::vector<double> mass(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<int> perm(n);
  std::vector<double> weights(terms);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  double total = 0.0;
  for (auto& w : weights) total += (w = unif(rng));
  for (int k = 0; k < terms; ++k) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i) mass[static_cast<std::size_t>(i) * n + perm[i]] += weights[k] / total / n;
  }
  return mass;
}

}  // namespace gini::testing
