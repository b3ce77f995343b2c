#include "gini/oracle/checkerboard.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace gini::oracle {

Checkerboard::Checkerboard(int n, std::vector<double> mass) : n_(n), mass_(std::move(mass)) {
  if (n < 1) throw DomainError("Checkerboard: order must be >= 1");
  const auto cells = static_cast<std::size_t>(n) * n;
  if (mass_.size() != cells) {
    throw DomainError("Checkerboard: expected " + std::to_string(cells) + " masses, got " +
                      std::to_string(mass_.size()));
  }
  const double target = 1.0 / n;
  std::vector<double> cols(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double m = mass_[static_cast<std::size_t>(i) * n + j];
      if (!(m >= 0.0)) {
        std::ostringstream os;
        os << "Checkerboard: negative mass " << m << " at (" << i << ", " << j << ")";
        throw DomainError(os.str());
      }
      row += m;
      cols[j] += m;
    }
    if (std::fabs(row - target) > kMarginTol) {
      std::ostringstream os;
      os.precision(15);
      os << "Checkerboard: row " << i << " sums to " << row << ", expected " << target;
      throw DomainError(os.str());
    }
  }
  for (int j = 0; j < n; ++j) {
    if (std::fabs(cols[j] - target) > kMarginTol) {
      std::ostringstream os;
      os.precision(15);
      os << "Checkerboard: column " << j << " sums to " << cols[j] << ", expected " << target;
      throw DomainError(os.str());
    }
  }
}

std::vector<double> overlap_fractions(int n, double x) {
  std::vector<double> f(n);
  for (int k = 0; k < n; ++k) f[k] = std::clamp(n * x - k, 0.0, 1.0);
  return f;
}

double checkerboard_eval(const Checkerboard& cb, const UnitPoint& p) {
  const int n = cb.order();
  const auto fu = overlap_fractions(n, p.u());
  const auto fv = overlap_fractions(n, p.v());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (fu[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += cb.mass(i, j) * fv[j];
    total += fu[i] * row;
  }
  return total;
}

Bivariate checkerboard_fn(const Checkerboard& cb) {
  return [cb](double u, double v) { return checkerboard_eval(cb, UnitPoint(u, v)); };
}

std::vector<double> gamma_coefficients(int n) {
  if (n < 1) throw DomainError("gamma_coefficients: order must be >= 1");
  // int_0^1 F_i(u) F_j(u) du and int_0^1 F_i(u) F_j(1-u) du, where F_k is the
  // overlap fraction of cell k.
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  const double dn = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = std::max(i, j);
      const double diag = 1.0 - (k + 1) / dn + (i == j ? 1.0 / (3.0 * dn) : 1.0 / (2.0 * dn));
      const int mirror = n - 1 - j;  // the cell where F_j(1-u) falls from 1 to 0
      double anti = 0.0;
      if (i < mirror) {
        anti = (mirror - i) / dn;
      } else if (i == mirror) {
        anti = 1.0 / (6.0 * dn);
      }
      g[static_cast<std::size_t>(i) * n + j] = 4.0 * (diag + anti);
    }
  }
  return g;
}

double gamma_checkerboard_exact(const Checkerboard& cb) {
  const auto g = gamma_coefficients(cb.order());
  double total = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) total += g[k] * cb.masses()[k];
  return total - 2.0;
}

Checkerboard read_checkerboard_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("checkerboard JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("mass") ||
      !doc["n"].is_number_integer() || !doc["mass"].is_array()) {
    throw DomainError("checkerboard JSON: expected {\"n\": int, \"mass\": [reals]}");
  }
  std::vector<double> mass;
  for (const auto& x : doc["mass"]) {
    if (!x.is_number()) throw DomainError("checkerboard JSON: mass entries must be numbers");
    mass.push_back(x.get<double>());
  }
  return Checkerboard(doc["n"].get<int>(), std::move(mass));
}

void write_checkerboard_json(std::ostream& out, const Checkerboard& cb) {
  nlohmann::json doc;
  doc["n"] = cb.order();
  doc["mass"] = cb.masses();
  out << doc.dump() << '\n';
}

}  // namespace gini::oracle
