#include "meb/clip.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "meb/errors.hpp"

namespace meb {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v))
            throw NumericError(std::string(what) + ": non-finite value");
}

void check_geometry(std::size_t w, std::size_t h, std::size_t c) {
    if (w == 0 || h == 0) throw ShapeError("image dimensions must be >= 1");
    if (c != 1 && c != 3) throw ShapeError("channels must be 1 or 3");
}

}  // namespace

Image::Image(std::size_t width, std::size_t height, std::size_t channels)
    : width_(width), height_(height), channels_(channels),
      values_(width * height * channels, 0.0) {
    check_geometry(width, height, channels);
}

Image::Image(std::size_t width, std::size_t height, std::size_t channels,
             std::vector<double> values)
    : width_(width), height_(height), channels_(channels), values_(std::move(values)) {
    check_geometry(width, height, channels);
    if (values_.size() != width * height * channels)
        throw ShapeError("Image: value count does not match dimensions");
    require_finite(values_, "Image");
}

Clip::Clip(std::size_t width, std::size_t height, std::size_t channels,
           std::size_t frames)
    : width_(width), height_(height), channels_(channels), frames_(frames),
      values_(width * height * channels * frames, 0.0) {
    check_geometry(width, height, channels);
    if (frames == 0) throw EmptyClipError("Clip: frame count must be >= 1");
}

Clip::Clip(std::size_t width, std::size_t height, std::size_t channels,
           std::size_t frames, std::vector<double> values)
    : width_(width), height_(height), channels_(channels), frames_(frames),
      values_(std::move(values)) {
    check_geometry(width, height, channels);
    if (frames == 0) throw EmptyClipError("Clip: frame count must be >= 1");
    if (values_.size() != pixel_count() * frames)
        throw ShapeError("Clip: value count does not match dimensions");
    require_finite(values_, "Clip");
}

Clip Clip::from_frames(const std::vector<Image>& frames) {
    if (frames.empty()) throw EmptyClipError("Clip: no frames");
    const Image& first = frames.front();
    Clip clip(first.width(), first.height(), first.channels(), frames.size());
    for (std::size_t t = 0; t < frames.size(); ++t) clip.set_frame(t, frames[t]);
    return clip;
}

Image Clip::frame(std::size_t t) const {
    if (t >= frames_) throw RangeError("Clip::frame: index out of range");
    const double* src = frame_data(t);
    return Image(width_, height_, channels_,
                 std::vector<double>(src, src + pixel_count()));
}

void Clip::set_frame(std::size_t t, const Image& img) {
    if (t >= frames_) throw RangeError("Clip::set_frame: index out of range");
    if (img.width() != width_ || img.height() != height_ ||
        img.channels() != channels_)
        throw ShapeError("Clip::set_frame: frame geometry mismatch");
    std::copy(img.values().begin(), img.values().end(), frame_data(t));
}

double Clip::max_abs_diff(const Clip& a, const Clip& b) {
    if (a.values().size() != b.values().size())
        throw ShapeError("Clip::max_abs_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
        worst = std::fmax(worst, std::fabs(a.values()[i] - b.values()[i]));
    return worst;
}

}  // namespace meb
