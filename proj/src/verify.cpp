#include "meb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "meb/booster.hpp"
#include "meb/errors.hpp"
#include "meb/interpolate.hpp"
#include "meb/lut_io.hpp"
#include "meb/magnify.hpp"
#include "meb/pyramid.hpp"
#include "meb/rng.hpp"

namespace meb {

namespace {

// Distinct per-suite salts keep instance streams independent.
constexpr std::uint64_t kOracleSalt = 0x6f7261636c650000ull;
constexpr std::uint64_t kColumnSalt = 0x636f6c756d6e0000ull;
constexpr std::uint64_t kPyramidSalt = 0x707972616d000000ull;
constexpr std::uint64_t kIdentitySalt = 0x6964656e74000000ull;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

MagnifyParams random_params(Rng& rng) {
    const double a = rng.uniform(0.01, 0.99);
    const double b = rng.uniform(0.01, 0.99);
    double w1 = std::max(a, b);
    double w2 = std::min(a, b);
    if (w1 == w2) {
        w1 = 0.6;
        w2 = 0.3;
    }
    return MagnifyParams(rng.uniform(0.0, 32.0), w1, w2);
}

Clip random_clip(Rng& rng, std::size_t width, std::size_t height, std::size_t channels,
                 std::size_t frames) {
    Clip clip(width, height, channels, frames);
    for (std::size_t t = 0; t < frames; ++t) {
        double* frame = clip.frame_data(t);
        for (std::size_t p = 0; p < clip.pixel_count(); ++p) frame[p] = rng.u01();
    }
    return clip;
}

}  // namespace

SuiteResult oracle_equivalence_suite(std::uint64_t seed, std::size_t instances,
                                     int threads) {
    SuiteResult result{"oracle-equivalence", instances, true, ""};
    for (std::size_t i = 0; i < instances; ++i) {
        const std::uint64_t instance_seed = seed + kOracleSalt + i;
        Rng rng(instance_seed);
        const std::size_t w = rng.uniform_int(1, 8);
        const std::size_t h = rng.uniform_int(1, 8);
        const std::size_t t_in = rng.uniform_int(3, 40);
        const std::size_t t_out = rng.uniform_int(2, 40);
        const MagnifyParams params = random_params(rng);
        const Clip clip = random_clip(rng, w, h, 1, t_in);

        const Clip fused =
            apply_operator(clip, fused_operator(t_in, t_out, params), threads);
        const Clip separate = oracle_interpolate(oracle_magnify(clip, params), t_out);
        const double diff = Clip::max_abs_diff(fused, separate);
        if (!(diff <= 1e-8)) {
            result.passed = false;
            result.detail = "fused vs sequential oracles differ by " + format_double(diff) +
                            " (instance " + std::to_string(i) + ", seed " +
                            std::to_string(instance_seed) + ")";
            return result;
        }
    }
    return result;
}

SuiteResult identity_degeneration_suite(std::uint64_t seed) {
    SuiteResult result{"identity-degeneration", 0, true, ""};

    for (std::size_t t : {1, 2, 3, 10, 64}) {
        const Matrix w = build_magnification_matrix(t, MagnifyParams(0.0, 0.4, 0.05));
        ++result.cases;
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                if (w(i, j) != (i == j ? 1.0 : 0.0)) {
                    result.passed = false;
                    result.detail = "alpha = 0 magnification matrix is not the exact identity"
                                    " at T = " + std::to_string(t);
                    return result;
                }
            }
        }
    }

    for (std::size_t t = 2; t <= 64; ++t) {
        const Matrix w = build_interpolation_matrix(t, t);
        ++result.cases;
        const double diff = max_abs_diff(w, Matrix::identity(t));
        if (!(diff <= 1e-9)) {
            result.passed = false;
            result.detail = "equal-length re-sampler deviates from identity by " +
                            format_double(diff) + " at T = " + std::to_string(t);
            return result;
        }
    }

    const std::uint64_t instance_seed = seed + kIdentitySalt;
    Rng rng(instance_seed);
    const Clip clip = random_clip(rng, 32, 24, 1, 8);
    BoosterParams params;
    params.magnify = MagnifyParams(0.0, 0.4, 0.05);
    params.out_len = 8;
    params.levels = 3;
    params.min_dim = 1;
    const Clip boosted = boost_clip(clip, params);
    ++result.cases;
    const double diff = Clip::max_abs_diff(boosted, clip);
    if (!(diff <= 1e-6)) {
        result.passed = false;
        result.detail = "identity pipeline through the pyramid deviates by " +
                        format_double(diff) + " (seed " + std::to_string(instance_seed) + ")";
    }
    return result;
}

SuiteResult column_sum_suite(std::uint64_t seed, std::size_t instances) {
    SuiteResult result{"column-sum", instances, true, ""};
    for (std::size_t i = 0; i < instances; ++i) {
        const std::uint64_t instance_seed = seed + kColumnSalt + i;
        Rng rng(instance_seed);
        const std::size_t t_in = rng.uniform_int(2, 48);
        const std::size_t t_out = rng.uniform_int(1, 48);
        const MagnifyParams params = random_params(rng);

        const auto fail = [&](const std::string& what) {
            result.passed = false;
            result.detail = what + " (instance " + std::to_string(i) + ", seed " +
                            std::to_string(instance_seed) + ")";
        };

        const Matrix wm = build_magnification_matrix(t_in, params);
        const Matrix wi = build_interpolation_matrix(t_in, t_out);
        const Matrix fused = matmul(wm, wi);

        for (std::size_t r = 0; r < t_in; ++r) {
            for (std::size_t c = 0; c < r; ++c) {
                if (wm(r, c) != 0.0) {
                    fail("magnification matrix has a nonzero below the diagonal");
                    return result;
                }
            }
        }
        const auto column_sums_ok = [](const Matrix& m) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                double sum = 0.0;
                for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
                if (!(std::abs(sum - 1.0) <= 1e-9)) return false;
            }
            return true;
        };
        if (!column_sums_ok(wm)) {
            fail("magnification columns do not sum to 1");
            return result;
        }
        if (!column_sums_ok(wi)) {
            fail("re-sampler columns do not sum to 1");
            return result;
        }
        if (!column_sums_ok(fused)) {
            fail("fused columns do not sum to 1");
            return result;
        }
        for (std::size_t r = 0; r < t_in; ++r) {
            const double expected = (r + 1 == t_in) ? 1.0 : 0.0;
            if (!(std::abs(wi(r, t_out - 1) - expected) <= 1e-9)) {
                fail("re-sampler last column does not pick the last frame");
                return result;
            }
        }
    }
    return result;
}

SuiteResult orthogonality_suite(std::size_t max_frames) {
    SuiteResult result{"orthogonality", 0, true, ""};
    for (std::size_t t = 2; t <= max_frames; ++t) {
        ++result.cases;
        const Matrix y = build_curve_matrix(t, t);
        const Matrix gram = matmul(y, transpose(y));
        const double half = static_cast<double>(t) / 2.0;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            for (std::size_t j = 0; j + 1 < t; ++j) {
                const double expected = (i == j) ? half : 0.0;
                if (!(std::abs(gram(i, j) - expected) <= 1e-9)) {
                    result.passed = false;
                    result.detail = "curve rows lose orthogonality at T = " +
                                    std::to_string(t) + ", entry (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")";
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult pyramid_roundtrip_suite(std::uint64_t seed, std::size_t instances) {
    SuiteResult result{"pyramid-roundtrip", instances, true, ""};
    for (std::size_t i = 0; i < instances; ++i) {
        const std::uint64_t instance_seed = seed + kPyramidSalt + i;
        Rng rng(instance_seed);
        const std::size_t w = rng.uniform_int(8, 48);
        const std::size_t h = rng.uniform_int(8, 48);
        const std::size_t channels = (rng.uniform_int(0, 1) == 0) ? 1 : 3;
        const std::size_t levels = rng.uniform_int(1, 4);

        Image img(w, h, channels);
        for (double& v : img.values()) v = rng.u01();

        const Image back = collapse_pyramid(build_pyramid(img, levels));
        double diff = 0.0;
        for (std::size_t p = 0; p < img.pixel_count(); ++p) {
            diff = std::max(diff, std::abs(img.values()[p] - back.values()[p]));
        }
        if (!(diff <= 1e-6)) {
            result.passed = false;
            result.detail = "round trip error " + format_double(diff) + " (instance " +
                            std::to_string(i) + ", seed " + std::to_string(instance_seed) +
                            ")";
            return result;
        }
    }
    return result;
}

SuiteResult lut_column_sum_suite(const std::filesystem::path& path) {
    SuiteResult result{"lut-column-sum", 0, true, ""};
    const OperatorMatrix op = read_lut(path);
    result.cases = op.t_out;
    for (std::size_t c = 0; c < op.t_out; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < op.t_in; ++r) sum += op.matrix(r, c);
        if (!(std::abs(sum - 1.0) <= 1e-9)) {
            result.passed = false;
            result.detail = "column " + std::to_string(c) + " sums to " +
                            format_double(sum) + " in " + path.string();
            return result;
        }
    }
    return result;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int threads) {
    return {
        oracle_equivalence_suite(seed, 200, threads),
        identity_degeneration_suite(seed),
        column_sum_suite(seed),
        orthogonality_suite(),
        pyramid_roundtrip_suite(seed),
    };
}

}  // namespace meb
