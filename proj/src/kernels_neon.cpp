#if defined(__aarch64__)

#include <arm_neon.h>

#include "meb/kernels.hpp"

// NEON backend.  vmulq/vaddq only -- no vfma, the scalar kernels round
// multiply and add separately and the vector path has to agree bitwise.

namespace meb::kernels::neon {

void axpy(double* dst, double a, const double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t ax = vmulq_f64(va, vld1q_f64(x + i));
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(dst + i), ax));
    }
    for (; i < n; ++i) dst[i] += a * x[i];
}

void scale(double* dst, double a, const double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) dst[i] = a * x[i];
}

void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t ax = vmulq_f64(va, vld1q_f64(x + i));
        float64x2_t by = vmulq_f64(vb, vld1q_f64(y + i));
        vst1q_f64(dst + i, vaddq_f64(ax, by));
    }
    for (; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}

void madd(double* dst, const double* x, double a, const double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t ay = vmulq_f64(va, vld1q_f64(y + i));
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(x + i), ay));
    }
    for (; i < n; ++i) dst[i] = x[i] + a * y[i];
}

void add(double* dst, const double* x, const double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) dst[i] = x[i] + y[i];
}

void sub(double* dst, const double* x, const double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(dst + i, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) dst[i] = x[i] - y[i];
}

}  // namespace meb::kernels::neon

#endif  // aarch64
