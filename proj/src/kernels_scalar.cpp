#include "meb/kernels.hpp"

// Reference kernels.  This translation unit is compiled for the baseline
// target ISA; the vector backends must match it bit for bit.

namespace meb::kernels::scalar {

void axpy(double* dst, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += a * x[i];
}

void scale(double* dst, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i];
}

void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}

void madd(double* dst, const double* x, double a, const double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] + a * y[i];
}

void add(double* dst, const double* x, const double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] + y[i];
}

void sub(double* dst, const double* x, const double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] - y[i];
}

}  // namespace meb::kernels::scalar
