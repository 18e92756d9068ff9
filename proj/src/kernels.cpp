#include "meb/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace meb::kernels {

namespace {

struct Table {
    void (*axpy)(double*, double, const double*, std::size_t);
    void (*scale)(double*, double, const double*, std::size_t);
    void (*lincomb)(double*, double, const double*, double, const double*, std::size_t);
    void (*madd)(double*, const double*, double, const double*, std::size_t);
    void (*add)(double*, const double*, const double*, std::size_t);
    void (*sub)(double*, const double*, const double*, std::size_t);
    const char* name;
};

constexpr Table kScalar{scalar::axpy, scalar::scale, scalar::lincomb,
                        scalar::madd, scalar::add,   scalar::sub,
                        "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2{avx2::axpy, avx2::scale, avx2::lincomb,
                      avx2::madd, avx2::add,   avx2::sub,
                      "avx2"};
#endif
#if defined(__aarch64__)
constexpr Table kNeon{neon::axpy, neon::scale, neon::lincomb,
                      neon::madd, neon::add,   neon::sub,
                      "neon"};
#endif

Table resolve() {
    const char* forced = std::getenv("MEB_KERNELS");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0) return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(forced, "avx2") == 0 && avx2::supported()) return kAvx2;
#endif
#if defined(__aarch64__)
        if (std::strcmp(forced, "neon") == 0) return kNeon;
#endif
        return kScalar;  // unknown or unavailable backend name
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::supported()) return kAvx2;
#endif
#if defined(__aarch64__)
    return kNeon;
#endif
    return kScalar;
}

const Table& active() {
    static const Table table = resolve();
    return table;
}

}  // namespace

void axpy(double* dst, double a, const double* x, std::size_t n) {
    active().axpy(dst, a, x, n);
}
void scale(double* dst, double a, const double* x, std::size_t n) {
    active().scale(dst, a, x, n);
}
void lincomb(double* dst, double a, const double* x, double b, const double* y,
             std::size_t n) {
    active().lincomb(dst, a, x, b, y, n);
}
void madd(double* dst, const double* x, double a, const double* y, std::size_t n) {
    active().madd(dst, x, a, y, n);
}
void add(double* dst, const double* x, const double* y, std::size_t n) {
    active().add(dst, x, y, n);
}
void sub(double* dst, const double* x, const double* y, std::size_t n) {
    active().sub(dst, x, y, n);
}

std::string_view backend() { return active().name; }

}  // namespace meb::kernels
