#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "gini/simd/kernels.hpp"

using namespace gini::simd;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

const KernelTable* vector_table() {
  const KernelTable* t = avx2_kernels();
  return (t && cpu_supports_avx2()) ? t : nullptr;
}

// Lengths straddling the 4-lane width and its tails.
const std::size_t kLengths[] = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 100, 401, 1001};

}  // namespace

TEST_CASE("scalar kernels against hand-written loops") {
  const auto& s = scalar_kernels();
  const double r0[] = {0.0, 0.1, 0.3, 0.4};
  const double r1[] = {0.0, 0.2, 0.3, 0.9};
  const auto mv = s.min_cell_volume(r0, r1, 3);
  CHECK(mv.value == doctest::Approx(-0.1));
  CHECK(mv.index == 1);
  const auto ds = s.diff_stats(r0, r1, 4);
  CHECK(ds.min_diff == 0.0);
  CHECK(ds.max_abs_diff == doctest::Approx(0.5));
  const double samples[] = {1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK(s.simpson_sum(samples, 5) == 12.0);
  double dst[] = {1.0, 2.0, 3.0};
  const double src[] = {1.0, 1.0, 2.0};
  s.row_update(dst, src, 0.5, 3);
  CHECK(dst[0] == 0.5);
  CHECK(dst[2] == 2.0);
}

TEST_CASE("argmin reports the first index on ties") {
  const double r0[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  const double r1[] = {0, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  // volumes: 1, 0, 0, ... -> min 0 first at index 1
  CHECK(scalar_kernels().min_cell_volume(r0, r1, 9).index == 1);
  if (const auto* v = vector_table()) CHECK(v->min_cell_volume(r0, r1, 9).index == 1);
}

TEST_CASE("dispatch") {
  const auto& k = kernels();
  if (vector_table()) {
    CHECK((k.isa == Isa::Avx2 || k.isa == Isa::Scalar));
  } else {
    CHECK(k.isa == Isa::Scalar);
  }
  CHECK(isa_name(Isa::Scalar) == "scalar");
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const KernelTable* v = vector_table();
  if (!v) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  const auto& s = scalar_kernels();
  std::mt19937_64 rng(42);
  for (std::size_t n : kLengths) {
    CAPTURE(n);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_vector(n + 1, rng);
      const auto b = random_vector(n + 1, rng);

      const auto ms = s.min_cell_volume(a.data(), b.data(), n);
      const auto mv = v->min_cell_volume(a.data(), b.data(), n);
      CHECK(same_bits(ms.value, mv.value));
      CHECK(ms.index == mv.index);

      const auto ds = s.diff_stats(a.data(), b.data(), n);
      const auto dv = v->diff_stats(a.data(), b.data(), n);
      CHECK(same_bits(ds.min_diff, dv.min_diff));
      CHECK(same_bits(ds.max_abs_diff, dv.max_abs_diff));

      auto x = a;
      auto y = a;
      s.row_update(x.data(), b.data(), 0.37, n);
      v->row_update(y.data(), b.data(), 0.37, n);
      CHECK(std::memcmp(x.data(), y.data(), n * sizeof(double)) == 0);
    }
    if (n >= 3 && n % 2 == 1) {
      const auto c = random_vector(n, rng);
      const double ss = s.simpson_sum(c.data(), n);
      const double sv = v->simpson_sum(c.data(), n);
      CHECK(std::fabs(ss - sv) <= 1e-13 * n);
    }
  }
}
