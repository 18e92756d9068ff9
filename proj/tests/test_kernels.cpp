#include <cstring>
#include <vector>

#include "doctest.h"
#include "meb/kernels.hpp"
#include "meb/rng.hpp"

using namespace meb;

namespace {

const std::vector<std::size_t> kSizes = {0, 1, 3, 4, 7, 8, 31, 100, 1000};

std::vector<double> random_vec(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-2.0, 2.0);
    return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    return a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

template <typename Axpy, typename Scale, typename Lincomb, typename Madd, typename Add,
          typename Sub>
void compare_backends(Axpy axpy, Scale scale, Lincomb lincomb, Madd madd, Add add,
                      Sub sub) {
    Rng rng(2024);
    for (std::size_t n : kSizes) {
        const std::vector<double> x = random_vec(rng, n);
        const std::vector<double> y = random_vec(rng, n);
        const std::vector<double> init = random_vec(rng, n);
        const double a = rng.uniform(-3.0, 3.0);
        const double b = rng.uniform(-3.0, 3.0);

        std::vector<double> got = init, want = init;
        axpy(got.data(), a, x.data(), n);
        kernels::scalar::axpy(want.data(), a, x.data(), n);
        CHECK(bitwise_equal(got, want));

        got.assign(n, 0.0);
        want.assign(n, 0.0);
        scale(got.data(), a, x.data(), n);
        kernels::scalar::scale(want.data(), a, x.data(), n);
        CHECK(bitwise_equal(got, want));

        lincomb(got.data(), a, x.data(), b, y.data(), n);
        kernels::scalar::lincomb(want.data(), a, x.data(), b, y.data(), n);
        CHECK(bitwise_equal(got, want));

        madd(got.data(), x.data(), a, y.data(), n);
        kernels::scalar::madd(want.data(), x.data(), a, y.data(), n);
        CHECK(bitwise_equal(got, want));

        add(got.data(), x.data(), y.data(), n);
        kernels::scalar::add(want.data(), x.data(), y.data(), n);
        CHECK(bitwise_equal(got, want));

        sub(got.data(), x.data(), y.data(), n);
        kernels::scalar::sub(want.data(), x.data(), y.data(), n);
        CHECK(bitwise_equal(got, want));
    }
}

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference bit for bit") {
    compare_backends(kernels::axpy, kernels::scale, kernels::lincomb, kernels::madd,
                     kernels::add, kernels::sub);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 backend matches the scalar reference bit for bit") {
    if (!kernels::avx2::supported()) return;
    compare_backends(kernels::avx2::axpy, kernels::avx2::scale, kernels::avx2::lincomb,
                     kernels::avx2::madd, kernels::avx2::add, kernels::avx2::sub);
}
#endif

TEST_CASE("kernels accept dst aliasing an input") {
    Rng rng(7);
    for (std::size_t n : kSizes) {
        const std::vector<double> x = random_vec(rng, n);
        const std::vector<double> y = random_vec(rng, n);
        const double a = 1.5, b = -0.25;

        std::vector<double> want(n, 0.0);
        kernels::lincomb(want.data(), a, x.data(), b, y.data(), n);
        std::vector<double> got = x;
        kernels::lincomb(got.data(), a, got.data(), b, y.data(), n);
        CHECK(bitwise_equal(got, want));

        want.assign(n, 0.0);
        kernels::scale(want.data(), a, x.data(), n);
        got = x;
        kernels::scale(got.data(), a, got.data(), n);
        CHECK(bitwise_equal(got, want));

        want = x;
        kernels::axpy(want.data(), b, y.data(), n);
        got = y;
        std::vector<double> dst = x;
        kernels::axpy(dst.data(), b, got.data(), n);
        CHECK(bitwise_equal(dst, want));
    }
}

TEST_CASE("backend reports the active implementation") {
    const std::string_view name = kernels::backend();
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
