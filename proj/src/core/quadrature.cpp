#include "gini/core/quadrature.hpp"

#include <string>
#include <vector>

#include "gini/simd/kernels.hpp"

namespace gini {

double gamma_quadrature(const Bivariate& f, int m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("gamma_quadrature: panel count must be even and >= 2, got " +
                      std::to_string(m));
  }
  std::vector<double> g(static_cast<std::size_t>(m) + 1);
  const double h = 1.0 / m;
  for (int k = 0; k <= m; ++k) {
    const double u = (k == m) ? 1.0 : k * h;
    g[k] = f(u, u) + f(u, 1.0 - u);
  }
  const double integral = simd::kernels().simpson_sum(g.data(), g.size()) * h / 3.0;
  return 4.0 * integral - 2.0;
}

}  // namespace gini
