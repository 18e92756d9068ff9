#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "meb/booster.hpp"
#include "meb/errors.hpp"
#include "meb/synth.hpp"

using namespace meb;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool frames_bitwise_equal(const Clip& clip, std::size_t a, std::size_t b) {
    return std::memcmp(clip.frame_data(a), clip.frame_data(b),
                       clip.pixel_count() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("a step track is zero before the step frame and flat after it") {
    SynthSpec spec;
    spec.width = 32;
    spec.height = 8;
    spec.frames = 10;
    spec.motion = StepMotion{0.25, 5};
    const auto [clip, truth] = make_clip(spec);

    REQUIRE(truth.displacement_px.size() == 10);
    for (std::size_t i = 0; i < 4; ++i) CHECK(truth.displacement_px[i] == 0.0);
    for (std::size_t i = 4; i < 10; ++i) CHECK(truth.displacement_px[i] == 0.25);
    for (std::size_t i = 1; i < 4; ++i) CHECK(frames_bitwise_equal(clip, 0, i));
    CHECK(!frames_bitwise_equal(clip, 0, 5));
}

TEST_CASE("zero amplitude renders identical frames and a zero track") {
    SynthSpec spec;
    spec.width = 16;
    spec.height = 16;
    spec.frames = 6;
    spec.motion = SinusoidalMotion{0.0, 0.7};
    const auto [clip, truth] = make_clip(spec);
    for (std::size_t i = 1; i < 6; ++i) CHECK(frames_bitwise_equal(clip, 0, i));
    for (double d : truth.displacement_px) CHECK(d == 0.0);
}

TEST_CASE("a sinusoidal track samples the sine at one-based frame times") {
    SynthSpec spec;
    spec.width = 16;
    spec.height = 4;
    spec.frames = 9;
    spec.motion = SinusoidalMotion{0.1, kPi / 4.0};
    const auto [clip, truth] = make_clip(spec);
    for (std::size_t i = 0; i < 9; ++i) {
        const double want = 0.1 * std::sin(kPi / 4.0 * static_cast<double>(i + 1));
        CHECK(truth.displacement_px[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("ground truth serializes as a frame,displacement_px table") {
    const auto path = std::filesystem::temp_directory_path() / "meb_truth.csv";
    write_ground_truth(GroundTruth{{0.0, 0.25, -0.5}}, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "frame,displacement_px");
    std::getline(in, line);
    CHECK(line == "0,0");
    std::getline(in, line);
    CHECK(line == "1,0.25");
    std::getline(in, line);
    CHECK(line == "2,-0.5");
    CHECK(!std::getline(in, line));
}

TEST_CASE("measured displacement recovers the sinusoidal track to 0.01 px") {
    SynthSpec spec;
    spec.width = 128;
    spec.height = 32;
    spec.frames = 30;
    spec.wavelength = 16.0;
    spec.motion = SinusoidalMotion{1.5, 0.3};
    const auto [clip, truth] = make_clip(spec);

    const std::vector<double> measured = measure_displacement(clip, 0, 16.0);
    for (std::size_t i = 0; i < 30; ++i) {
        const double want = truth.displacement_px[i] - truth.displacement_px[0];
        CHECK(std::abs(measured[i] - want) <= 0.01);
    }
}

TEST_CASE("measured displacement recovers a one-pixel step") {
    SynthSpec spec;
    spec.width = 64;
    spec.height = 16;
    spec.frames = 8;
    spec.motion = StepMotion{1.0, 4};
    const auto [clip, truth] = make_clip(spec);

    const std::vector<double> measured = measure_displacement(clip, 0, spec.wavelength);
    CHECK(std::abs(measured[1]) <= 0.01);
    CHECK(std::abs(measured[5] - 1.0) <= 0.01);
}

TEST_CASE("a static clip measures as zero displacement") {
    SynthSpec spec;
    spec.width = 64;
    spec.height = 8;
    spec.frames = 5;
    spec.motion = SinusoidalMotion{0.0, 0.7};
    const auto [clip, truth] = make_clip(spec);
    for (double d : measure_displacement(clip, 0, spec.wavelength)) {
        CHECK(std::abs(d) <= 1e-12);
    }
}

TEST_CASE("measurement needs a visible fundamental") {
    SynthSpec spec;
    spec.width = 32;
    spec.height = 8;
    spec.frames = 3;
    spec.contrast = 0.0;
    const auto [clip, truth] = make_clip(spec);
    CHECK_THROWS_AS(measure_displacement(clip, 0, spec.wavelength), NoSignalError);
}

TEST_CASE("measurement validates its arguments") {
    SynthSpec spec;
    spec.width = 32;
    spec.height = 8;
    spec.frames = 3;
    const auto [clip, truth] = make_clip(spec);
    CHECK_THROWS_AS(measure_displacement(clip, 3, spec.wavelength), RangeError);
    CHECK_THROWS_AS(measure_displacement(clip, 0, 0.0), ValidationError);
    CHECK_THROWS_AS(measure_displacement(clip, 0, -2.0), ValidationError);

    Clip rgb(4, 4, 3, 2, std::vector<double>(96, 0.5));
    CHECK_THROWS_AS(measure_displacement(rgb, 0, 8.0), ShapeError);
}

TEST_CASE("plaid displacement must stay in the first-order regime") {
    SynthSpec spec;
    spec.width = 32;
    spec.height = 8;
    spec.frames = 4;
    spec.wavelength = 16.0;
    spec.motion = SinusoidalMotion{2.5, 0.7};
    try {
        make_clip(spec);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("first-order") != std::string::npos);
    }

    spec.pattern = SynthPattern::gaussian_blob;
    CHECK_NOTHROW(make_clip(spec));

    spec.pattern = SynthPattern::plaid;
    spec.motion = StepMotion{-3.0, 2};
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
}

TEST_CASE("render settings reject out-of-range fields") {
    SynthSpec spec;
    spec.contrast = 0.6;
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
    spec.contrast = -0.1;
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
    spec.contrast = 0.2;
    spec.wavelength = 0.0;
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
    spec.wavelength = 16.0;
    spec.frames = 0;
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
    spec.frames = 4;
    spec.width = 0;
    CHECK_THROWS_AS(make_clip(spec), ValidationError);
}

TEST_CASE("re-timed clips track the re-timed ground truth") {
    SynthSpec spec;
    spec.width = 128;
    spec.height = 32;
    spec.frames = 16;
    spec.wavelength = 16.0;
    spec.motion = SinusoidalMotion{0.8, 0.4};
    const auto [clip, truth] = make_clip(spec);

    const OperatorMatrix w = interpolation_operator(16, 31);
    const Clip out = apply_operator(clip, w);

    Clip track(1, 1, 1, 16, truth.displacement_px);
    const Clip recon = apply_operator(track, w);
    std::vector<double> expected(31);
    double lo = recon.value(0, 0), hi = lo;
    for (std::size_t j = 0; j < 31; ++j) {
        expected[j] = recon.value(0, j) - recon.value(0, 0);
        lo = std::min(lo, recon.value(0, j));
        hi = std::max(hi, recon.value(0, j));
    }

    const std::vector<double> measured = measure_displacement(out, 0, 16.0);
    const double tol = 0.1 * (hi - lo);
    REQUIRE(hi - lo > 0.5);
    for (std::size_t j = 0; j < 31; ++j) {
        CHECK(std::abs(measured[j] - expected[j]) <= tol);
    }
}
