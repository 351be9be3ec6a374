#include "kaspin/kernels/blade_kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace kaspin::kernels {
namespace {

// Lanes with a zero table entry are masked out so that the accumulation
// sequence per output slot is identical to the scalar reference.
void blade_product_avx2(const double* a, const double* b, const double* table, double* out,
                        std::size_t n) {
  if (n < 4) {
    blade_product_scalar(a, b, table, out, n);
    return;
  }
  const __m256i lane = _mm256_set_epi64x(3, 2, 1, 0);
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const __m256d va = _mm256_set1_pd(ai);
    const __m256i vi = _mm256_set1_epi64x(static_cast<long long>(i));
    const double* row = table + i * n;
    for (std::size_t k = 0; k < n; k += 4) {
      const __m256d t = _mm256_loadu_pd(row + k);
      const __m256d live = _mm256_cmp_pd(t, zero, _CMP_NEQ_OQ);
      if (_mm256_movemask_pd(live) == 0) continue;
      const __m256i idx =
          _mm256_xor_si256(_mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(k)), lane), vi);
      const __m256d vb = _mm256_i64gather_pd(b, idx, 8);
      const __m256d acc = _mm256_loadu_pd(out + k);
      const __m256d upd = _mm256_fmadd_pd(_mm256_mul_pd(va, t), vb, acc);
      _mm256_storeu_pd(out + k, _mm256_blendv_pd(acc, upd, live));
    }
  }
}

}  // namespace

BladeProductFn blade_product_avx2_entry() { return &blade_product_avx2; }

}  // namespace kaspin::kernels

#else

namespace kaspin::kernels {
BladeProductFn blade_product_avx2_entry() { return nullptr; }
}  // namespace kaspin::kernels

#endif
