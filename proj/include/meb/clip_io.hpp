#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "meb/clip.hpp"

namespace meb {

/// Describes a frame sequence on disk: a directory plus a printf-style
/// filename pattern with one zero-padded index placeholder (e.g.
/// "frame_%04d.png", indices start at 0).  channels is the in-memory layout
/// requested on load (1 = gray, 3 = rgb) and must match the clip on save.
/// frames = 0 means probe the directory on load.  bit_depth (8 or 16)
/// applies on save only.
struct ClipManifest {
    std::filesystem::path directory;
    std::string pattern = "frame_%04d.png";
    std::size_t channels = 1;
    std::size_t frames = 0;
    std::optional<double> fps;
    unsigned bit_depth = 8;
};

/// Path of frame `index` under the manifest's directory and pattern.
std::filesystem::path frame_path(const ClipManifest& manifest, std::size_t index);

/// Number of consecutive frame files starting at index 0.
std::size_t probe_frame_count(const ClipManifest& manifest);

/// Loads PNG or binary PNM (P5/P6) frames, 8- or 16-bit, mapping samples to
/// [0,1] by the format maximum.  RGB files collapse to luminance
/// (0.299 R + 0.587 G + 0.114 B) when gray is requested; gray files
/// replicate when rgb is requested.
Clip load_clip(const ClipManifest& manifest);

/// Writes the clip per the manifest pattern.  Values are clamped to [0,1]
/// here and only here, then quantized by round(value * max).
void save_clip(const Clip& clip, const ClipManifest& manifest);

}  // namespace meb
