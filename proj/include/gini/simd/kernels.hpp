#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference implementation
// and, on x86-64, an AVX2 variant chosen at runtime. Lattice kernels are
// bitwise-identical across variants; the Simpson sum reassociates and agrees to
// rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace gini::simd {

struct MinArg {
  double value;
  std::size_t index;  // first index attaining value
};

struct DiffStats {
  double min_diff;     // min_j (b[j] - a[j])
  double max_abs_diff; // max_j |b[j] - a[j]|
};

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  // Cell volumes r1[j+1] - r1[j] - r0[j+1] + r0[j] for j < cells; min and first argmin.
  MinArg (*min_cell_volume)(const double* r0, const double* r1, std::size_t cells);
  DiffStats (*diff_stats)(const double* a, const double* b, std::size_t count);
  // dst[j] -= factor * src[j]
  void (*row_update)(double* dst, const double* src, double factor, std::size_t count);
  // Composite Simpson weights 1,4,2,...,2,4,1 applied to samples (size odd, >= 3).
  double (*simpson_sum)(const double* samples, std::size_t count);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant is not compiled in.
const KernelTable* avx2_kernels();

/// Kernel table chosen once per process: AVX2 when compiled in and supported by
/// the CPU, unless GINI_BOUNDS_SIMD=scalar.
const KernelTable& kernels();

bool cpu_supports_avx2();
std::string_view isa_name(Isa isa);

}  // namespace gini::simd
