#include "meb/interpolate.hpp"

#include <cmath>
#include <cstring>
#include <vector>

#include "meb/errors.hpp"
#include "meb/kernels.hpp"

namespace meb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_lengths(std::size_t frames_in, std::size_t frames_out) {
    if (frames_in < 2) {
        throw DegenerateLengthError("interpolation needs at least two input frames");
    }
    if (frames_out == 0) {
        throw EmptyClipError("interpolation needs at least one output frame");
    }
}

}  // namespace

double latent_curve(std::size_t k, double t, std::size_t frames) {
    if (frames < 2) {
        throw DegenerateLengthError("latent curves need at least two frames");
    }
    if (k < 1 || k > frames - 1) {
        throw RangeError("curve index must lie in [1, frames - 1]");
    }
    if (!std::isfinite(t) || !(t > 0.0) || t > 1.0) {
        throw RangeError("curve time must lie in (0, 1]");
    }
    const double tt = static_cast<double>(frames);
    const double kk = static_cast<double>(k);
    return std::sin(kPi * kk * t + kPi * (tt - kk) / (2.0 * tt));
}

Matrix build_curve_matrix(std::size_t frames, std::size_t samples) {
    check_lengths(frames, samples);
    Matrix y(frames - 1, samples);
    for (std::size_t k = 1; k < frames; ++k) {
        for (std::size_t j = 1; j <= samples; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(samples);
            y(k - 1, j - 1) = latent_curve(k, t, frames);
        }
    }
    return y;
}

Matrix build_interpolation_matrix(std::size_t frames_in, std::size_t frames_out) {
    check_lengths(frames_in, frames_out);

    const Matrix y = build_curve_matrix(frames_in, frames_in);
    const Matrix yp = build_curve_matrix(frames_in, frames_out);
    const Matrix gram = matmul(y, transpose(y));
    const Matrix coeff = solve_spd(gram, yp);
    const Matrix proj = matmul(transpose(y), coeff);

    // Centering: subtract the per-column mean of the projection and add back
    // a uniform 1/T so constant clips pass through untouched.
    const double t = static_cast<double>(frames_in);
    Matrix w(frames_in, frames_out);
    for (std::size_t j = 0; j < frames_out; ++j) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < frames_in; ++i) colsum += proj(i, j);
        const double shift = (colsum - 1.0) / t;
        for (std::size_t i = 0; i < frames_in; ++i) w(i, j) = proj(i, j) - shift;
    }
    return w;
}

Clip oracle_interpolate(const Clip& clip, std::size_t frames_out) {
    const std::size_t t = clip.frames();
    check_lengths(t, frames_out);
    const std::size_t d = clip.pixel_count();

    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < t; ++i) {
        kernels::add(mean.data(), mean.data(), clip.frame_data(i), d);
    }
    kernels::scale(mean.data(), 1.0 / static_cast<double>(t), mean.data(), d);

    // Centered clip as a T x d matrix; row i is frame i minus the mean.
    Matrix centered(t, d);
    for (std::size_t i = 0; i < t; ++i) {
        kernels::sub(centered.row(i), clip.frame_data(i), mean.data(), d);
    }

    const Matrix y = build_curve_matrix(t, t);
    const Matrix gram = matmul(y, transpose(y));
    const Matrix rhs = matmul(y, centered);
    const Matrix coeff = solve_spd(gram, rhs);
    const Matrix yp = build_curve_matrix(t, frames_out);

    Clip out(clip.width(), clip.height(), clip.channels(), frames_out);
    for (std::size_t j = 0; j < frames_out; ++j) {
        double* frame = out.frame_data(j);
        std::memcpy(frame, mean.data(), d * sizeof(double));
        for (std::size_t k = 0; k + 1 < t; ++k) {
            kernels::axpy(frame, yp(k, j), coeff.row(k), d);
        }
    }
    return out;
}

}  // namespace meb
