#pragma once

#include <cstddef>
#include <filesystem>
#include <variant>
#include <vector>

#include "meb/clip.hpp"

namespace meb {

enum class SynthPattern {
    plaid,          // sum of two orthogonal sinusoids
    gaussian_blob,  // isotropic blob, sigma = wavelength / 4
};

/// delta(t) = amplitude * sin(omega * t), t = 1..T.
struct SinusoidalMotion {
    double amplitude = 0.1;
    double omega = 0.7853981633974483;  // pi/4 radians per frame
};

/// delta(t) = size for t >= at_frame (1-based), else 0.
struct StepMotion {
    double size = 0.25;
    std::size_t at_frame = 5;
};

using Motion = std::variant<SinusoidalMotion, StepMotion>;

/// Synthetic grayscale clip: pattern(x - delta(t), y) rendered analytically,
/// value = 0.5 + contrast-scaled pattern.  For plaids the displacement must
/// stay within the first-order regime bound |delta| <= wavelength / 8.
struct SynthSpec {
    std::size_t width = 128;
    std::size_t height = 128;
    std::size_t frames = 128;
    SynthPattern pattern = SynthPattern::plaid;
    double wavelength = 16.0;
    Motion motion = SinusoidalMotion{};
    double contrast = 0.2;
};

/// Per-frame horizontal displacement in pixels, index 0 = first frame.
struct GroundTruth {
    std::vector<double> displacement_px;
};

std::pair<Clip, GroundTruth> make_clip(const SynthSpec& spec);

/// Writes "frame,displacement_px" rows, frame indices starting at 0.
void write_ground_truth(const GroundTruth& truth, const std::filesystem::path& path);

/// Recovers per-frame horizontal displacement (relative to reference_frame)
/// from the phase of the spatial fundamental at the given wavelength.
/// Accurate to 0.01 px on analytic plaids; throws NoSignalError when the
/// fundamental's amplitude falls below 1e-6.
std::vector<double> measure_displacement(const Clip& clip, std::size_t reference_frame,
                                         double wavelength);

}  // namespace meb
