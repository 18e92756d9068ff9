#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "meb/clip.hpp"
#include "meb/magnify.hpp"
#include "meb/operator_matrix.hpp"

namespace meb {

/// Full pipeline configuration: magnification parameters, output length,
/// pyramid depth (1 = no pyramid) and per-level alpha ceilings.  min_dim is
/// the smallest coarsest-level dimension the pyramid may shrink to.
struct BoosterParams {
    MagnifyParams magnify;
    std::size_t out_len = 10;
    std::size_t levels = 1;
    std::optional<std::vector<double>> alpha_caps;
    std::size_t min_dim = 16;
};

OperatorMatrix magnification_operator(std::size_t frames, const MagnifyParams& params);
OperatorMatrix interpolation_operator(std::size_t frames_in, std::size_t frames_out);

/// W = W^M * W^I: magnification first, then temporal re-sampling.
OperatorMatrix fuse(const OperatorMatrix& wm, const OperatorMatrix& wi);

/// Convenience: builds both factors and fuses them.
OperatorMatrix fused_operator(std::size_t frames_in, std::size_t frames_out,
                              const MagnifyParams& params);

/// Output frame j, pixel p: sum_i clip[p,i] * W[i,j], accumulated in
/// ascending i.  Bit-identical for any thread count (threads split the pixel
/// range; per-pixel arithmetic is unchanged).
Clip apply_operator(const Clip& clip, const OperatorMatrix& w, int threads = 1);

/// Effective alpha for one pyramid level: the explicit cap if given,
/// otherwise min(alpha, lambda/8 - 1) with lambda = 4 * 2^level pixels,
/// clamped at 0.
double truncate_alpha(const BoosterParams& params, std::size_t level);

/// Thread-safe cache of fused operators keyed by (t_in, t_out, alpha, w1,
/// w2); hits return the same immutable instance.  With a directory set,
/// operators persist as LUT files and are reloaded on first use; an
/// unreadable or mismatched file is rebuilt and overwritten.
class OperatorCache {
public:
    OperatorCache() = default;
    explicit OperatorCache(std::filesystem::path lut_dir);

    std::shared_ptr<const OperatorMatrix> fused(std::size_t t_in, std::size_t t_out,
                                                const MagnifyParams& params);

    std::size_t size() const;

private:
    using Key = std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t,
                           std::uint64_t>;

    std::filesystem::path lut_dir_;
    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const OperatorMatrix>> entries_;
};

/// End-to-end boost: per-frame Laplacian decomposition, one fused operator
/// per band-pass level with truncated alpha, interpolation only (alpha = 0)
/// for the residual, then collapse into out_len frames.  levels = 1 applies
/// the single fused operator directly.
Clip boost_clip(const Clip& clip, const BoosterParams& params,
                OperatorCache* cache = nullptr, int threads = 1);

}  // namespace meb
