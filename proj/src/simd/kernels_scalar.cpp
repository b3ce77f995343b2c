#include <cmath>

#include "gini/simd/kernels.hpp"

namespace gini::simd {
namespace {

MinArg min_cell_volume_scalar(const double* r0, const double* r1, std::size_t cells) {
  MinArg best{INFINITY, 0};
  for (std::size_t j = 0; j < cells; ++j) {
    const double vol = ((r1[j + 1] - r1[j]) - r0[j + 1]) + r0[j];
    if (vol < best.value) best = {vol, j};
  }
  return best;
}

DiffStats diff_stats_scalar(const double* a, const double* b, std::size_t count) {
  DiffStats s{INFINITY, 0.0};
  for (std::size_t j = 0; j < count; ++j) {
    const double d = b[j] - a[j];
    if (d < s.min_diff) s.min_diff = d;
    const double ad = std::fabs(d);
    if (ad > s.max_abs_diff) s.max_abs_diff = ad;
  }
  return s;
}

void row_update_scalar(double* dst, const double* src, double factor, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) dst[j] = dst[j] - factor * src[j];
}

double simpson_sum_scalar(const double* s, std::size_t count) {
  const std::size_t last = count - 1;
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < last; k += 2) odd += s[k];
  for (std::size_t k = 2; k < last; k += 2) even += s[k];
  return s[0] + s[last] + 4.0 * odd + 2.0 * even;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, min_cell_volume_scalar, diff_stats_scalar,
                                 row_update_scalar, simpson_sum_scalar};
  return table;
}

}  // namespace gini::simd
