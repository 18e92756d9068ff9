#include "meb/booster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <utility>

#include "meb/errors.hpp"
#include "meb/interpolate.hpp"
#include "meb/kernels.hpp"
#include "meb/lut_io.hpp"
#include "meb/parallel.hpp"
#include "meb/pyramid.hpp"

namespace meb {

const char* to_string(OperatorRole role) {
    switch (role) {
        case OperatorRole::magnify: return "magnify";
        case OperatorRole::interpolate: return "interpolate";
        case OperatorRole::fused: return "fused";
    }
    return "unknown";
}

namespace {

void check_params(const BoosterParams& params) {
    MagnifyParams checked(params.magnify.alpha, params.magnify.w1, params.magnify.w2);
    if (params.out_len == 0) throw ValidationError("out_len must be >= 1");
    if (params.levels == 0) throw ValidationError("levels must be >= 1");
    if (params.alpha_caps) {
        if (params.alpha_caps->size() != params.levels) {
            throw ValidationError("alpha_caps must list one ceiling per pyramid level");
        }
        for (double cap : *params.alpha_caps) {
            if (!std::isfinite(cap) || cap < 0.0) {
                throw ValidationError("alpha ceilings must be finite and >= 0");
            }
        }
    }
}

}  // namespace

OperatorMatrix magnification_operator(std::size_t frames, const MagnifyParams& params) {
    return OperatorMatrix{build_magnification_matrix(frames, params),
                          OperatorRole::magnify, frames, frames,
                          params.alpha, params.w1, params.w2};
}

OperatorMatrix interpolation_operator(std::size_t frames_in, std::size_t frames_out) {
    return OperatorMatrix{build_interpolation_matrix(frames_in, frames_out),
                          OperatorRole::interpolate, frames_in, frames_out};
}

OperatorMatrix fuse(const OperatorMatrix& wm, const OperatorMatrix& wi) {
    if (wm.role != OperatorRole::magnify || wi.role != OperatorRole::interpolate) {
        throw ShapeError("fuse expects a magnification and an interpolation operator");
    }
    if (wm.t_out != wi.t_in) {
        throw ShapeError("fuse: operator frame counts do not chain");
    }
    return OperatorMatrix{matmul(wm.matrix, wi.matrix), OperatorRole::fused,
                          wm.t_in, wi.t_out, wm.alpha, wm.w1, wm.w2};
}

OperatorMatrix fused_operator(std::size_t frames_in, std::size_t frames_out,
                              const MagnifyParams& params) {
    return fuse(magnification_operator(frames_in, params),
                interpolation_operator(frames_in, frames_out));
}

Clip apply_operator(const Clip& clip, const OperatorMatrix& w, int threads) {
    if (clip.frames() != w.t_in) {
        throw ShapeError("clip frame count does not match operator t_in");
    }
    if (w.matrix.rows() != w.t_in || w.matrix.cols() != w.t_out) {
        throw ShapeError("operator matrix dimensions disagree with t_in/t_out");
    }

    const std::size_t d = clip.pixel_count();
    Clip out(clip.width(), clip.height(), clip.channels(), w.t_out);
    parallel_for(d, threads, [&](std::size_t lo, std::size_t hi) {
        const std::size_t n = hi - lo;
        if (n == 0) return;
        for (std::size_t j = 0; j < w.t_out; ++j) {
            double* dst = out.frame_data(j) + lo;
            kernels::scale(dst, w.matrix(0, j), clip.frame_data(0) + lo, n);
            for (std::size_t i = 1; i < w.t_in; ++i) {
                kernels::axpy(dst, w.matrix(i, j), clip.frame_data(i) + lo, n);
            }
        }
    });
    return out;
}

double truncate_alpha(const BoosterParams& params, std::size_t level) {
    check_params(params);
    if (level >= params.levels) throw RangeError("pyramid level out of range");
    const double alpha = params.magnify.alpha;
    if (params.alpha_caps) return std::min(alpha, (*params.alpha_caps)[level]);
    const double lambda = 4.0 * static_cast<double>(std::size_t{1} << level);
    return std::max(0.0, std::min(alpha, lambda / 8.0 - 1.0));
}

OperatorCache::OperatorCache(std::filesystem::path lut_dir)
    : lut_dir_(std::move(lut_dir)) {}

std::size_t OperatorCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::shared_ptr<const OperatorMatrix> OperatorCache::fused(
    std::size_t t_in, std::size_t t_out, const MagnifyParams& params) {
    const Key key{t_in, t_out, std::bit_cast<std::uint64_t>(params.alpha),
                  std::bit_cast<std::uint64_t>(params.w1),
                  std::bit_cast<std::uint64_t>(params.w2)};

    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;

    std::filesystem::path file;
    if (!lut_dir_.empty()) {
        char name[96];
        std::snprintf(name, sizeof(name), "fused_T%zux%zu_%016llx_%016llx_%016llx.mebw",
                      t_in, t_out,
                      static_cast<unsigned long long>(std::get<2>(key)),
                      static_cast<unsigned long long>(std::get<3>(key)),
                      static_cast<unsigned long long>(std::get<4>(key)));
        file = lut_dir_ / name;
        if (std::filesystem::exists(file)) {
            try {
                OperatorMatrix lut = read_lut(file);
                const bool matches =
                    lut.role == OperatorRole::fused && lut.t_in == t_in &&
                    lut.t_out == t_out &&
                    std::bit_cast<std::uint64_t>(lut.alpha) == std::get<2>(key) &&
                    std::bit_cast<std::uint64_t>(lut.w1) == std::get<3>(key) &&
                    std::bit_cast<std::uint64_t>(lut.w2) == std::get<4>(key);
                if (matches) {
                    auto op = std::make_shared<const OperatorMatrix>(std::move(lut));
                    entries_.emplace(key, op);
                    return op;
                }
            } catch (const Error&) {
                // A stale or corrupt cache file is rebuilt below.
            }
        }
    }

    auto op = std::make_shared<const OperatorMatrix>(fused_operator(t_in, t_out, params));
    if (!lut_dir_.empty()) {
        std::filesystem::create_directories(lut_dir_);
        write_lut(*op, file);
    }
    entries_.emplace(key, op);
    return op;
}

Clip boost_clip(const Clip& clip, const BoosterParams& params, OperatorCache* cache,
                int threads) {
    check_params(params);
    if (clip.frames() < 2) {
        throw DegenerateLengthError("boosting needs at least two frames");
    }

    const auto fused_for = [&](double alpha) {
        MagnifyParams p = params.magnify;
        p.alpha = alpha;
        if (cache) return cache->fused(clip.frames(), params.out_len, p);
        return std::make_shared<const OperatorMatrix>(
            fused_operator(clip.frames(), params.out_len, p));
    };

    if (params.levels == 1) {
        return apply_operator(clip, *fused_for(params.magnify.alpha), threads);
    }

    const auto dims =
        pyramid_level_dims(clip.width(), clip.height(), params.levels);
    if (std::min(dims.back().first, dims.back().second) < params.min_dim) {
        throw PyramidDepthError("pyramid would shrink below the minimum dimension");
    }

    // Decompose every input frame, regroup per level into clips.
    std::vector<Clip> level_clips;
    level_clips.reserve(params.levels);
    for (const auto& [w, h] : dims) {
        level_clips.emplace_back(w, h, clip.channels(), clip.frames());
    }
    for (std::size_t t = 0; t < clip.frames(); ++t) {
        PyramidStack stack = build_pyramid(clip.frame(t), params.levels);
        for (std::size_t s = 0; s < params.levels; ++s) {
            level_clips[s].set_frame(t, stack.levels[s]);
        }
    }

    // Band-pass levels get the truncated alpha, the residual is only
    // re-sampled in time.
    std::vector<Clip> boosted;
    boosted.reserve(params.levels);
    for (std::size_t s = 0; s + 1 < params.levels; ++s) {
        boosted.push_back(
            apply_operator(level_clips[s], *fused_for(truncate_alpha(params, s)), threads));
    }
    boosted.push_back(apply_operator(level_clips.back(), *fused_for(0.0), threads));

    Clip out(clip.width(), clip.height(), clip.channels(), params.out_len);
    for (std::size_t j = 0; j < params.out_len; ++j) {
        PyramidStack stack;
        stack.levels.reserve(params.levels);
        for (std::size_t s = 0; s < params.levels; ++s) {
            stack.levels.push_back(boosted[s].frame(j));
        }
        out.set_frame(j, collapse_pyramid(stack));
    }
    return out;
}

}  // namespace meb
