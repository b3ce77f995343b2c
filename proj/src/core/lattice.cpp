#include "gini/core/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gini/core/parallel.hpp"
#include "gini/simd/kernels.hpp"

namespace gini {

LatticeFunction::LatticeFunction(int cells, std::vector<double> values)
    : cells_(cells), values_(std::move(values)) {
  if (cells < 1) throw DomainError("LatticeFunction: need at least one cell per axis");
  if (values_.size() != stride() * stride()) {
    throw DomainError("LatticeFunction: expected " + std::to_string(stride() * stride()) +
                      " values, got " + std::to_string(values_.size()));
  }
}

LatticeFunction sample_lattice(const Bivariate& f, int cells) {
  if (cells < 1) throw DomainError("sample_lattice: need at least one cell per axis");
  const std::size_t stride = static_cast<std::size_t>(cells) + 1;
  std::vector<double> values(stride * stride);
  auto node = [cells](std::size_t i) {
    return i == static_cast<std::size_t>(cells) ? 1.0 : static_cast<double>(i) / cells;
  };
  parallel_for(stride, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double u = node(i);
      for (std::size_t j = 0; j < stride; ++j) values[i * stride + j] = f(u, node(j));
    }
  });
  return LatticeFunction(cells, std::move(values));
}

PropertyReport check_properties(const LatticeFunction& g, double tol) {
  const int n = g.cells();
  const std::size_t stride = g.stride();
  const double step = 1.0 / n;
  const auto& k = simd::kernels();

  PropertyReport r;
  double boundary = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = g.node(i);
    boundary = std::max({boundary, std::fabs(g.at(i, 0)), std::fabs(g.at(0, i)),
                         std::fabs(g.at(i, n) - x), std::fabs(g.at(n, i) - x)});
  }
  r.boundary_max_err = boundary;

  double min_step = INFINITY;
  double max_abs = 0.0;
  double min_vol = INFINITY;
  int vol_i = 0;
  int vol_j = 0;
  for (int i = 0; i <= n; ++i) {
    // along v within row i
    const auto along_v = k.diff_stats(g.row(i), g.row(i) + 1, stride - 1);
    min_step = std::min(min_step, along_v.min_diff);
    max_abs = std::max(max_abs, along_v.max_abs_diff);
    if (i == n) break;
    // along u between rows i and i+1
    const auto along_u = k.diff_stats(g.row(i), g.row(i + 1), stride);
    min_step = std::min(min_step, along_u.min_diff);
    max_abs = std::max(max_abs, along_u.max_abs_diff);
    const auto cell = k.min_cell_volume(g.row(i), g.row(i + 1), stride - 1);
    if (cell.value < min_vol) {
      min_vol = cell.value;
      vol_i = i;
      vol_j = static_cast<int>(cell.index);
    }
  }
  r.monotonicity_min_step = min_step;
  r.lipschitz_max_excess = max_abs - step;
  r.min_volume = min_vol;
  r.min_volume_rect = {vol_i, vol_i + 1, vol_j, vol_j + 1};
  r.is_quasicopula = boundary <= tol && min_step >= -tol && r.lipschitz_max_excess <= tol;
  r.is_copula = r.is_quasicopula && min_vol >= -tol;
  return r;
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_lattice_csv(std::ostream& out, const LatticeFunction& g) {
  const int n = g.cells();
  std::string text = "u,v,value\n";
  text.reserve(text.size() + g.values().size() * 40);
  for (int i = 0; i <= n; ++i) {
    const std::string u = format12(g.node(i));
    for (int j = 0; j <= n; ++j) {
      text += u;
      text += ',';
      text += format12(g.node(j));
      text += ',';
      text += format12(g.at(i, j));
      text += '\n';
    }
  }
  out << text;
}

LatticeFunction read_lattice_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "u,v,value") {
    throw DomainError("lattice CSV: missing `u,v,value` header");
  }
  std::vector<double> us;
  std::vector<double> vs;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double u = 0.0;
    double v = 0.0;
    double value = 0.0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream row(line);
    if (!(row >> u >> c1 >> v >> c2 >> value) || c1 != ',' || c2 != ',') {
      throw DomainError("lattice CSV: malformed row `" + line + "`");
    }
    us.push_back(u);
    vs.push_back(v);
    values.push_back(value);
  }
  const auto stride = static_cast<std::size_t>(std::llround(std::sqrt(double(values.size()))));
  if (stride < 2 || stride * stride != values.size()) {
    throw DomainError("lattice CSV: row count " + std::to_string(values.size()) +
                      " is not (N+1)^2 for N >= 1");
  }
  const int n = static_cast<int>(stride) - 1;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    const double eu = static_cast<double>(idx / stride) / n;
    const double ev = static_cast<double>(idx % stride) / n;
    if (std::fabs(us[idx] - eu) > 1e-9 || std::fabs(vs[idx] - ev) > 1e-9) {
      throw DomainError("lattice CSV: row " + std::to_string(idx + 1) +
                        " is out of row-major lattice order");
    }
  }
  return LatticeFunction(n, std::move(values));
}

}  // namespace gini
