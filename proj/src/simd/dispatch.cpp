#include <cstdlib>
#include <string>

#include "gini/simd/kernels.hpp"

namespace gini::simd {

#ifndef GINI_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports_avx2() {
#if defined(GINI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable& kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("GINI_BOUNDS_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return scalar_kernels();
    if (avx2_kernels() != nullptr && cpu_supports_avx2()) return *avx2_kernels();
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace gini::simd
