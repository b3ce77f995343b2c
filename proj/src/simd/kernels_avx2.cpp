// Compiled with -mavx2 (no FMA) so that per-element arithmetic rounds exactly
// like the scalar reference.
#include <immintrin.h>

#include <cmath>

#include "gini/simd/kernels.hpp"

namespace gini::simd {
namespace {

MinArg min_cell_volume_avx2(const double* r0, const double* r1, std::size_t cells) {
  MinArg best{INFINITY, 0};
  std::size_t j = 0;
  if (cells >= 4) {
    __m256d vmin = _mm256_set1_pd(INFINITY);
    __m256d vidx = _mm256_setzero_pd();
    __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);
    for (; j + 4 <= cells; j += 4) {
      const __m256d a = _mm256_loadu_pd(r1 + j + 1);
      const __m256d b = _mm256_loadu_pd(r1 + j);
      const __m256d c = _mm256_loadu_pd(r0 + j + 1);
      const __m256d d = _mm256_loadu_pd(r0 + j);
      const __m256d vol = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(a, b), c), d);
      const __m256d lt = _mm256_cmp_pd(vol, vmin, _CMP_LT_OQ);
      vmin = _mm256_blendv_pd(vmin, vol, lt);
      vidx = _mm256_blendv_pd(vidx, lane, lt);
      lane = _mm256_add_pd(lane, four);
    }
    alignas(32) double mins[4];
    alignas(32) double idx[4];
    _mm256_store_pd(mins, vmin);
    _mm256_store_pd(idx, vidx);
    for (int k = 0; k < 4; ++k) {
      const auto i = static_cast<std::size_t>(idx[k]);
      if (mins[k] < best.value || (mins[k] == best.value && i < best.index)) best = {mins[k], i};
    }
  }
  for (; j < cells; ++j) {
    const double vol = ((r1[j + 1] - r1[j]) - r0[j + 1]) + r0[j];
    if (vol < best.value) best = {vol, j};
  }
  return best;
}

DiffStats diff_stats_avx2(const double* a, const double* b, std::size_t count) {
  DiffStats s{INFINITY, 0.0};
  std::size_t j = 0;
  if (count >= 4) {
    __m256d vmin = _mm256_set1_pd(INFINITY);
    __m256d vmax = _mm256_setzero_pd();
    const __m256d sign = _mm256_set1_pd(-0.0);
    for (; j + 4 <= count; j += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(b + j), _mm256_loadu_pd(a + j));
      vmin = _mm256_min_pd(vmin, d);
      vmax = _mm256_max_pd(vmax, _mm256_andnot_pd(sign, d));
    }
    alignas(32) double mins[4];
    alignas(32) double maxs[4];
    _mm256_store_pd(mins, vmin);
    _mm256_store_pd(maxs, vmax);
    for (int k = 0; k < 4; ++k) {
      if (mins[k] < s.min_diff) s.min_diff = mins[k];
      if (maxs[k] > s.max_abs_diff) s.max_abs_diff = maxs[k];
    }
  }
  for (; j < count; ++j) {
    const double d = b[j] - a[j];
    if (d < s.min_diff) s.min_diff = d;
    const double ad = std::fabs(d);
    if (ad > s.max_abs_diff) s.max_abs_diff = ad;
  }
  return s;
}

void row_update_avx2(double* dst, const double* src, double factor, std::size_t count) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d prod = _mm256_mul_pd(f, _mm256_loadu_pd(src + j));
    _mm256_storeu_pd(dst + j, _mm256_sub_pd(_mm256_loadu_pd(dst + j), prod));
  }
  for (; j < count; ++j) dst[j] = dst[j] - factor * src[j];
}

double simpson_sum_avx2(const double* s, std::size_t count) {
  // Interior indices 1..last-1 in blocks of four: weights alternate 4,2,4,2.
  const std::size_t last = count - 1;
  __m256d acc = _mm256_setzero_pd();
  const __m256d w = _mm256_set_pd(2.0, 4.0, 2.0, 4.0);
  std::size_t k = 1;
  for (; k + 4 <= last; k += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(w, _mm256_loadu_pd(s + k)));
  alignas(32) double parts[4];
  _mm256_store_pd(parts, acc);
  double interior = (parts[0] + parts[2]) + (parts[1] + parts[3]);
  for (; k < last; ++k) interior += ((k % 2 == 1) ? 4.0 : 2.0) * s[k];
  return s[0] + s[last] + interior;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::Avx2, min_cell_volume_avx2, diff_stats_avx2,
                                 row_update_avx2, simpson_sum_avx2};
  return &table;
}

}  // namespace gini::simd
