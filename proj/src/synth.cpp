#include "meb/synth.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>

#include "meb/errors.hpp"

namespace meb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

std::vector<double> motion_track(const SynthSpec& spec) {
    std::vector<double> delta(spec.frames);
    for (std::size_t i = 0; i < spec.frames; ++i) {
        const double t = static_cast<double>(i + 1);
        if (const auto* sine = std::get_if<SinusoidalMotion>(&spec.motion)) {
            delta[i] = sine->amplitude * std::sin(sine->omega * t);
        } else {
            const auto& step = std::get<StepMotion>(spec.motion);
            delta[i] = (i + 1 >= step.at_frame) ? step.size : 0.0;
        }
    }
    return delta;
}

void check_spec(const SynthSpec& spec) {
    if (spec.width == 0 || spec.height == 0) throw ValidationError("frame dimensions must be >= 1");
    if (spec.frames == 0) throw ValidationError("need at least one frame");
    if (!std::isfinite(spec.wavelength) || spec.wavelength <= 0.0) {
        throw ValidationError("wavelength must be finite and positive");
    }
    if (!std::isfinite(spec.contrast) || spec.contrast < 0.0 || spec.contrast > 0.5) {
        throw ValidationError("contrast must lie in [0, 0.5]");
    }

    double peak = 0.0;
    if (const auto* sine = std::get_if<SinusoidalMotion>(&spec.motion)) {
        if (!std::isfinite(sine->amplitude) || sine->amplitude < 0.0) {
            throw ValidationError("motion amplitude must be finite and >= 0");
        }
        if (!std::isfinite(sine->omega)) throw ValidationError("motion frequency must be finite");
        peak = sine->amplitude;
    } else {
        const auto& step = std::get<StepMotion>(spec.motion);
        if (!std::isfinite(step.size)) throw ValidationError("step size must be finite");
        peak = std::abs(step.size);
    }
    if (spec.pattern == SynthPattern::plaid && peak > spec.wavelength / 8.0) {
        throw ValidationError(
            "displacement exceeds the first-order regime bound wavelength/8");
    }
}

}  // namespace

std::pair<Clip, GroundTruth> make_clip(const SynthSpec& spec) {
    check_spec(spec);
    const std::vector<double> delta = motion_track(spec);

    Clip clip(spec.width, spec.height, 1, spec.frames);
    const double c = spec.contrast;
    const double freq = kTwoPi / spec.wavelength;

    for (std::size_t t = 0; t < spec.frames; ++t) {
        double* frame = clip.frame_data(t);
        if (spec.pattern == SynthPattern::plaid) {
            for (std::size_t y = 0; y < spec.height; ++y) {
                const double row = (c / 2.0) * std::sin(freq * static_cast<double>(y));
                for (std::size_t x = 0; x < spec.width; ++x) {
                    const double u = static_cast<double>(x) - delta[t];
                    frame[y * spec.width + x] = 0.5 + (c / 2.0) * std::sin(freq * u) + row;
                }
            }
        } else {
            const double sigma = spec.wavelength / 4.0;
            const double cx = (static_cast<double>(spec.width) - 1.0) / 2.0;
            const double cy = (static_cast<double>(spec.height) - 1.0) / 2.0;
            for (std::size_t y = 0; y < spec.height; ++y) {
                const double dy = static_cast<double>(y) - cy;
                for (std::size_t x = 0; x < spec.width; ++x) {
                    const double dx = static_cast<double>(x) - cx - delta[t];
                    frame[y * spec.width + x] =
                        0.5 + c * std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
                }
            }
        }
    }
    return {std::move(clip), GroundTruth{delta}};
}

void write_ground_truth(const GroundTruth& truth, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "frame,displacement_px\n";
    char buf[48];
    for (std::size_t i = 0; i < truth.displacement_px.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, truth.displacement_px[i]);
        out << buf;
    }
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<double> measure_displacement(const Clip& clip, std::size_t reference_frame,
                                         double wavelength) {
    if (!std::isfinite(wavelength) || wavelength <= 0.0) {
        throw ValidationError("wavelength must be finite and positive");
    }
    if (reference_frame >= clip.frames()) throw RangeError("reference frame out of range");
    if (clip.channels() != 1) throw ShapeError("displacement measurement expects grayscale");

    // Truncate to whole spatial cycles so the other plaid components cancel.
    const double cycles = std::floor(static_cast<double>(clip.width()) / wavelength);
    const std::size_t nx =
        (cycles >= 1.0) ? static_cast<std::size_t>(cycles * wavelength) : clip.width();

    const std::size_t t = clip.frames();
    std::vector<double> phase(t);
    const double freq = kTwoPi / wavelength;
    std::vector<std::complex<double>> twiddle(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        twiddle[x] = std::polar(1.0, -freq * static_cast<double>(x));
    }
    for (std::size_t i = 0; i < t; ++i) {
        const double* frame = clip.frame_data(i);
        std::complex<double> z = 0.0;
        for (std::size_t y = 0; y < clip.height(); ++y) {
            for (std::size_t x = 0; x < nx; ++x) {
                z += frame[y * clip.width() + x] * twiddle[x];
            }
        }
        const double amplitude =
            2.0 * std::abs(z) / (static_cast<double>(nx) * static_cast<double>(clip.height()));
        if (amplitude < 1e-6) {
            throw NoSignalError("no fundamental at the requested wavelength in frame " +
                                std::to_string(i));
        }
        phase[i] = std::arg(z);
    }

    // Unwrap, then shift so the reference frame reads zero.
    std::vector<double> unwrapped(t);
    unwrapped[0] = phase[0];
    for (std::size_t i = 1; i < t; ++i) {
        unwrapped[i] = unwrapped[i - 1] + std::remainder(phase[i] - phase[i - 1], kTwoPi);
    }
    std::vector<double> displacement(t);
    for (std::size_t i = 0; i < t; ++i) {
        displacement[i] = -(unwrapped[i] - unwrapped[reference_frame]) * wavelength / kTwoPi;
    }
    return displacement;
}

}  // namespace meb
