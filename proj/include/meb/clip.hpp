#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace meb {

/// Single frame, planar channel layout: plane c starts at c*width*height,
/// rows inside a plane are contiguous (index y*width + x).
class Image {
public:
    Image(std::size_t width, std::size_t height, std::size_t channels);
    Image(std::size_t width, std::size_t height, std::size_t channels,
          std::vector<double> values);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t channels() const { return channels_; }
    std::size_t pixel_count() const { return width_ * height_ * channels_; }

    const double* plane(std::size_t c) const {
        return values_.data() + c * width_ * height_;
    }
    double* plane(std::size_t c) { return values_.data() + c * width_ * height_; }

    double at(std::size_t x, std::size_t y, std::size_t c = 0) const {
        return values_[c * width_ * height_ + y * width_ + x];
    }
    double& at(std::size_t x, std::size_t y, std::size_t c = 0) {
        return values_[c * width_ * height_ + y * width_ + x];
    }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

private:
    std::size_t width_;
    std::size_t height_;
    std::size_t channels_;
    std::vector<double> values_;
};

/// Frame sequence.  Logically a d x T value matrix (d = width*height*channels
/// pixels per frame, one column per frame); stored with frames contiguous so
/// operator application walks whole frames.  Values are nominally in [0,1]
/// but are never clamped here; only finiteness is enforced.
class Clip {
public:
    Clip(std::size_t width, std::size_t height, std::size_t channels,
         std::size_t frames);
    Clip(std::size_t width, std::size_t height, std::size_t channels,
         std::size_t frames, std::vector<double> values);

    static Clip from_frames(const std::vector<Image>& frames);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t channels() const { return channels_; }
    std::size_t frames() const { return frames_; }
    std::size_t pixel_count() const { return width_ * height_ * channels_; }

    const double* frame_data(std::size_t t) const {
        return values_.data() + t * pixel_count();
    }
    double* frame_data(std::size_t t) { return values_.data() + t * pixel_count(); }

    Image frame(std::size_t t) const;
    void set_frame(std::size_t t, const Image& img);

    /// Value of pixel p in frame t (entry (p, t) of the d x T matrix).
    double value(std::size_t p, std::size_t t) const {
        return values_[t * pixel_count() + p];
    }
    double& value(std::size_t p, std::size_t t) {
        return values_[t * pixel_count() + p];
    }

    std::span<const double> values() const { return values_; }

    /// Largest |a - b| over all values; dimensions must match.
    static double max_abs_diff(const Clip& a, const Clip& b);

private:
    std::size_t width_;
    std::size_t height_;
    std::size_t channels_;
    std::size_t frames_;
    std::vector<double> values_;
};

}  // namespace meb
