#pragma once

#include <cstddef>
#include <string_view>

// Elementwise double-precision kernels behind every dense loop in the
// library.  Each output element is produced with exactly one rounding per
// multiply and one per add (no FMA, no reassociation), so the scalar and
// vector backends are bit-identical and results do not depend on how work
// is split across threads.
//
// Aliasing: dst may equal any input pointer (same-index elementwise);
// partially overlapping ranges are not allowed.
//
// Backend selection is automatic (AVX2 on x86-64 when the CPU has it,
// NEON on aarch64, scalar otherwise) and can be forced with the
// MEB_KERNELS environment variable ("scalar", "avx2", "neon").

namespace meb::kernels {

void axpy(double* dst, double a, const double* x, std::size_t n);   // dst += a*x
void scale(double* dst, double a, const double* x, std::size_t n);  // dst  = a*x
void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n);                                        // dst = a*x + b*y
void madd(double* dst, const double* x, double a, const double* y,
          std::size_t n);                                           // dst = x + a*y
void add(double* dst, const double* x, const double* y, std::size_t n);
void sub(double* dst, const double* x, const double* y, std::size_t n);

// Name of the backend the dispatcher picked: "avx2", "neon" or "scalar".
std::string_view backend();

namespace scalar {
void axpy(double* dst, double a, const double* x, std::size_t n);
void scale(double* dst, double a, const double* x, std::size_t n);
void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n);
void madd(double* dst, const double* x, double a, const double* y, std::size_t n);
void add(double* dst, const double* x, const double* y, std::size_t n);
void sub(double* dst, const double* x, const double* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
void axpy(double* dst, double a, const double* x, std::size_t n);
void scale(double* dst, double a, const double* x, std::size_t n);
void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n);
void madd(double* dst, const double* x, double a, const double* y, std::size_t n);
void add(double* dst, const double* x, const double* y, std::size_t n);
void sub(double* dst, const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void axpy(double* dst, double a, const double* x, std::size_t n);
void scale(double* dst, double a, const double* x, std::size_t n);
void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n);
void madd(double* dst, const double* x, double a, const double* y, std::size_t n);
void add(double* dst, const double* x, const double* y, std::size_t n);
void sub(double* dst, const double* x, const double* y, std::size_t n);
}  // namespace neon
#endif

}  // namespace meb::kernels
