#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "meb/clip_io.hpp"
#include "meb/errors.hpp"
#include "meb/synth.hpp"

namespace {

struct SynthOpts {
    std::string output;
    std::string pattern = "frame_%04d.png";
    std::string csv;
    std::size_t width = 128;
    std::size_t height = 128;
    std::size_t frames = 64;
    std::string shape = "plaid";
    double wavelength = 16.0;
    double contrast = 0.2;
    std::string motion = "sinusoid";
    double amplitude = 0.1;
    double omega = 0.7853981633974483;
    double step_size = 0.25;
    std::size_t step_frame = 5;
    unsigned bit_depth = 8;
};

void run(const SynthOpts& opts) {
    meb::SynthSpec spec;
    spec.width = opts.width;
    spec.height = opts.height;
    spec.frames = opts.frames;
    spec.pattern = (opts.shape == "blob") ? meb::SynthPattern::gaussian_blob
                                          : meb::SynthPattern::plaid;
    spec.wavelength = opts.wavelength;
    spec.contrast = opts.contrast;
    if (opts.motion == "step") {
        spec.motion = meb::StepMotion{opts.step_size, opts.step_frame};
    } else {
        spec.motion = meb::SinusoidalMotion{opts.amplitude, opts.omega};
    }

    auto [clip, truth] = meb::make_clip(spec);

    meb::ClipManifest manifest;
    manifest.directory = opts.output;
    manifest.pattern = opts.pattern;
    manifest.channels = 1;
    manifest.bit_depth = opts.bit_depth;
    meb::save_clip(clip, manifest);

    const std::filesystem::path csv = opts.csv.empty()
        ? std::filesystem::path(opts.output) / "ground_truth.csv"
        : std::filesystem::path(opts.csv);
    meb::write_ground_truth(truth, csv);

    std::cout << "wrote " << clip.frames() << " frames to " << opts.output
              << " and ground truth to " << csv.string() << "\n";
}

}  // namespace

void register_synth(CLI::App& app) {
    auto opts = std::make_shared<SynthOpts>();
    CLI::App* cmd = app.add_subcommand(
        "synth", "Render a clip with known sub-pixel motion plus its ground truth");
    cmd->add_option("--output", opts->output, "Output frame directory")->required();
    cmd->add_option("--pattern", opts->pattern, "Frame filename pattern");
    cmd->add_option("--csv", opts->csv,
                    "Ground-truth CSV path (default <output>/ground_truth.csv)");
    cmd->add_option("--width", opts->width, "Frame width");
    cmd->add_option("--height", opts->height, "Frame height");
    cmd->add_option("--frames", opts->frames, "Frame count");
    cmd->add_option("--shape", opts->shape, "Rendered pattern")
        ->check(CLI::IsMember({"plaid", "blob"}));
    cmd->add_option("--wavelength", opts->wavelength, "Spatial wavelength in pixels");
    cmd->add_option("--contrast", opts->contrast, "Pattern amplitude in [0, 0.5]");
    cmd->add_option("--motion", opts->motion, "Motion law")
        ->check(CLI::IsMember({"sinusoid", "step"}));
    cmd->add_option("--amplitude", opts->amplitude, "Sinusoid amplitude in pixels");
    cmd->add_option("--omega", opts->omega, "Sinusoid frequency in radians per frame");
    cmd->add_option("--step-size", opts->step_size, "Step displacement in pixels");
    cmd->add_option("--step-frame", opts->step_frame, "1-based frame the step lands on");
    cmd->add_option("--bit-depth", opts->bit_depth, "Output sample depth (8 or 16)");
    cmd->callback([opts] { run(*opts); });
}
