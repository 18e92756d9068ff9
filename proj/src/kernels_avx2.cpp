#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "meb/kernels.hpp"

// AVX2 backend.  Built with -mavx2 but deliberately without -mfma: every
// lane does a plain multiply followed by a plain add, matching the scalar
// kernels exactly.

namespace meb::kernels::avx2 {

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void axpy(double* dst, double a, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vd = _mm256_loadu_pd(dst + i);
        _mm256_storeu_pd(dst + i, _mm256_add_pd(vd, _mm256_mul_pd(va, vx)));
    }
    for (; i < n; ++i) dst[i] += a * x[i];
}

void scale(double* dst, double a, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) dst[i] = a * x[i];
}

void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(ax, by));
    }
    for (; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}

void madd(double* dst, const double* x, double a, const double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ay = _mm256_mul_pd(va, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(x + i), ay));
    }
    for (; i < n; ++i) dst[i] = x[i] + a * y[i];
}

void add(double* dst, const double* x, const double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i,
                         _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) dst[i] = x[i] + y[i];
}

void sub(double* dst, const double* x, const double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i,
                         _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) dst[i] = x[i] - y[i];
}

}  // namespace meb::kernels::avx2

#endif  // x86-64
