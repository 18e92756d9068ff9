#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "meb/clip.hpp"

namespace meb {

/// Laplacian decomposition of one frame: levels[0..n-2] are band-pass images
/// of decreasing size, levels[n-1] is the low-pass residual.
struct PyramidStack {
    std::vector<Image> levels;

    const Image& residual() const { return levels.back(); }
};

/// Width/height of each pyramid level for a w x h frame: level s has
/// ceil(w / 2^s) x ceil(h / 2^s).
std::vector<std::pair<std::size_t, std::size_t>> pyramid_level_dims(
    std::size_t width, std::size_t height, std::size_t levels);

/// Decomposes a frame into `levels` images (levels - 1 band-pass plus one
/// residual) using a 5-tap binomial blur with symmetric-reflect borders.
/// Throws PyramidDepthError if the coarsest level would have a dimension
/// smaller than min_dim.
PyramidStack build_pyramid(const Image& frame, std::size_t levels,
                           std::size_t min_dim = 1);

/// Exact inverse of build_pyramid up to floating-point rounding.
Image collapse_pyramid(const PyramidStack& stack);

}  // namespace meb
