#include "meb/magnify.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "meb/errors.hpp"
#include "meb/kernels.hpp"

namespace meb {

MagnifyParams::MagnifyParams(double alpha, double w1, double w2)
    : alpha(alpha), w1(w1), w2(w2) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw ValidationError("alpha must be finite and >= 0");
    }
    if (!std::isfinite(w1) || !std::isfinite(w2) || !(0.0 < w2) || !(w2 < w1) ||
        !(w1 < 1.0)) {
        throw ValidationError("smoothing factors must satisfy 0 < w2 < w1 < 1");
    }
}

Matrix build_magnification_matrix(std::size_t frames, const MagnifyParams& params) {
    if (frames == 0) throw EmptyClipError("magnification matrix needs at least one frame");
    MagnifyParams checked(params.alpha, params.w1, params.w2);

    const std::size_t t = frames;
    const double alpha = params.alpha;
    const double w1 = params.w1;
    const double w2 = params.w2;

    // pow1[k] = (1 - w1)^k, pow2[k] = (1 - w2)^k.
    std::vector<double> pow1(t, 1.0), pow2(t, 1.0);
    for (std::size_t k = 1; k < t; ++k) {
        pow1[k] = pow1[k - 1] * (1.0 - w1);
        pow2[k] = pow2[k - 1] * (1.0 - w2);
    }

    Matrix w(t, t);
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = r; c < t; ++c) {
            if (c == r) {
                // Both filters copy the first frame through unchanged, so the
                // band-pass contributes nothing there.
                w(r, c) = (r == 0) ? 1.0 : alpha * (w1 - w2) + 1.0;
            } else {
                const double f1 = (r == 0) ? 1.0 : w1;
                const double f2 = (r == 0) ? 1.0 : w2;
                w(r, c) = alpha * pow1[c - r] * f1 - alpha * pow2[c - r] * f2;
            }
        }
    }
    return w;
}

Clip oracle_magnify(const Clip& clip, const MagnifyParams& params) {
    MagnifyParams checked(params.alpha, params.w1, params.w2);

    const std::size_t t = clip.frames();
    const std::size_t d = clip.pixel_count();
    Clip out(clip.width(), clip.height(), clip.channels(), t);

    std::vector<double> low1(clip.frame_data(0), clip.frame_data(0) + d);
    std::vector<double> low2 = low1;
    std::vector<double> band(d);

    for (std::size_t i = 0; i < t; ++i) {
        const double* frame = clip.frame_data(i);
        if (i > 0) {
            kernels::lincomb(low1.data(), params.w1, frame, 1.0 - params.w1,
                             low1.data(), d);
            kernels::lincomb(low2.data(), params.w2, frame, 1.0 - params.w2,
                             low2.data(), d);
        }
        kernels::sub(band.data(), low1.data(), low2.data(), d);
        kernels::madd(out.frame_data(i), frame, params.alpha, band.data(), d);
    }
    return out;
}

double filter_gain(const MagnifyParams& params, double omega) {
    MagnifyParams checked(params.alpha, params.w1, params.w2);
    if (!std::isfinite(omega) || omega < 0.0 || omega > std::acos(-1.0)) {
        throw RangeError("omega must lie in [0, pi]");
    }
    // Both low-pass filters have unit DC gain, so the band-pass vanishes at
    // omega = 0.  Return exactly 1 rather than trusting rounding to do so.
    if (omega == 0.0) return 1.0;

    const std::complex<double> z = std::polar(1.0, -omega);
    const auto h = [&](double w) {
        return w / (1.0 - (1.0 - w) * z);
    };
    return std::abs(1.0 + params.alpha * (h(params.w1) - h(params.w2)));
}

}  // namespace meb
