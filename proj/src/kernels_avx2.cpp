// Built with -mavx2; only reached after a runtime CPU check.

#include "m0n/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace m0n {

#if defined(__AVX2__)

void axpy_mod_avx2(double* row, const double* pivot, double f, std::size_t len, double p) noexcept {
    const __m256d vf = _mm256_set1_pd(f);
    const __m256d vp = _mm256_set1_pd(p);
    const __m256d vinv = _mm256_set1_pd(1.0 / p);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d x = _mm256_add_pd(_mm256_loadu_pd(row + i), _mm256_mul_pd(vf, _mm256_loadu_pd(pivot + i)));
        __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
        __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, vp));
        // the quotient estimate can be off by one either way
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
        _mm256_storeu_pd(row + i, r);
    }
    axpy_mod_scalar(row + i, pivot + i, f, len - i, p);
}

#else

void axpy_mod_avx2(double* row, const double* pivot, double f, std::size_t len, double p) noexcept {
    axpy_mod_scalar(row, pivot, f, len, p);
}

#endif

}  // namespace m0n
