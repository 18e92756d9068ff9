#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "meb/booster.hpp"
#include "meb/clip_io.hpp"
#include "meb/errors.hpp"

namespace {

struct BoostOpts {
    std::string input;
    std::string output;
    std::string pattern = "frame_%04d.png";
    std::string out_pattern = "frame_%04d.png";
    std::string channels = "gray";
    std::size_t frames_in = 0;  // 0 = probe
    std::size_t frames = 10;
    double alpha = 16.0;
    double w1 = 0.4;
    double w2 = 0.05;
    std::size_t levels = 1;
    std::vector<double> alpha_caps;
    std::size_t min_dim = 16;
    unsigned bit_depth = 8;
    std::string lut_cache;
    int threads = 1;
};

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const meb::Error& e) {
        throw meb::Error(std::string(name) + ": " + e.what());
    }
}

void run(const BoostOpts& opts) {
    meb::ClipManifest in;
    in.directory = opts.input;
    in.pattern = opts.pattern;
    in.channels = (opts.channels == "rgb") ? 3 : 1;
    in.frames = opts.frames_in;
    const meb::Clip clip = stage("load", [&] { return meb::load_clip(in); });

    const meb::Clip boosted = stage("process", [&] {
        meb::BoosterParams params;
        params.magnify = meb::MagnifyParams(opts.alpha, opts.w1, opts.w2);
        params.out_len = opts.frames;
        params.levels = opts.levels;
        if (!opts.alpha_caps.empty()) params.alpha_caps = opts.alpha_caps;
        params.min_dim = opts.min_dim;

        if (!opts.lut_cache.empty()) {
            meb::OperatorCache cache{std::filesystem::path(opts.lut_cache)};
            return meb::boost_clip(clip, params, &cache, opts.threads);
        }
        return meb::boost_clip(clip, params, nullptr, opts.threads);
    });

    stage("save", [&] {
        meb::ClipManifest out;
        out.directory = opts.output;
        out.pattern = opts.out_pattern;
        out.channels = boosted.channels();
        out.bit_depth = opts.bit_depth;
        meb::save_clip(boosted, out);
    });

    std::cout << "wrote " << boosted.frames() << " frames to " << opts.output << "\n";
}

}  // namespace

void register_boost(CLI::App& app) {
    auto opts = std::make_shared<BoostOpts>();
    CLI::App* cmd = app.add_subcommand(
        "boost", "Magnify subtle motion and re-time a frame sequence");
    cmd->add_option("--input", opts->input, "Input frame directory")->required();
    cmd->add_option("--output", opts->output, "Output frame directory")->required();
    cmd->add_option("--pattern", opts->pattern,
                    "Input filename pattern with a %0Nd index placeholder");
    cmd->add_option("--out-pattern", opts->out_pattern, "Output filename pattern");
    cmd->add_option("--channels", opts->channels, "Channel layout to process")
        ->check(CLI::IsMember({"gray", "rgb"}));
    cmd->add_option("--frames-in", opts->frames_in,
                    "Input frame count (0 = probe the directory)");
    cmd->add_option("--frames", opts->frames, "Output frame count");
    cmd->add_option("--alpha", opts->alpha, "Magnification factor");
    cmd->add_option("--w1", opts->w1, "Fast smoother weight");
    cmd->add_option("--w2", opts->w2, "Slow smoother weight");
    cmd->add_option("--levels", opts->levels, "Pyramid levels (1 = no pyramid)");
    cmd->add_option("--alpha-caps", opts->alpha_caps,
                    "Per-level alpha ceilings, one per pyramid level")
        ->delimiter(',');
    cmd->add_option("--min-dim", opts->min_dim,
                    "Smallest coarsest-level dimension the pyramid may reach");
    cmd->add_option("--bit-depth", opts->bit_depth, "Output sample depth (8 or 16)");
    cmd->add_option("--lut-cache", opts->lut_cache,
                    "Directory for persisted fused-operator files");
    cmd->add_option("--threads", opts->threads, "Worker threads for applying operators");
    cmd->callback([opts] { run(*opts); });
}
