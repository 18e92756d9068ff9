#include "meb/pyramid.hpp"

#include <algorithm>
#include <vector>

#include "meb/errors.hpp"

namespace meb {

namespace {

// 5-tap binomial blur.  The doubled variant compensates for the zeros
// inserted by upsampling (half the samples per axis carry signal).
constexpr double kTap[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
constexpr double kTapUp[5] = {2.0 / 16, 8.0 / 16, 12.0 / 16, 8.0 / 16, 2.0 / 16};

std::size_t reflect(long idx, std::size_t n) {
    const long m = static_cast<long>(n);
    while (idx < 0 || idx >= m) {
        idx = (idx < 0) ? -1 - idx : 2 * m - 1 - idx;
    }
    return static_cast<std::size_t>(idx);
}

void convolve_x(const double* src, double* dst, std::size_t w, std::size_t h,
                const double* taps) {
    for (std::size_t y = 0; y < h; ++y) {
        const double* row = src + y * w;
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = 0; k < 5; ++k) {
                acc += taps[k] * row[reflect(static_cast<long>(x) + k - 2, w)];
            }
            dst[y * w + x] = acc;
        }
    }
}

void convolve_y(const double* src, double* dst, std::size_t w, std::size_t h,
                const double* taps) {
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = 0; k < 5; ++k) {
                acc += taps[k] * src[reflect(static_cast<long>(y) + k - 2, h) * w + x];
            }
            dst[y * w + x] = acc;
        }
    }
}

Image blur(const Image& img, const double* taps) {
    const std::size_t w = img.width(), h = img.height();
    Image out(w, h, img.channels());
    std::vector<double> tmp(w * h);
    for (std::size_t c = 0; c < img.channels(); ++c) {
        convolve_x(img.plane(c), tmp.data(), w, h, taps);
        convolve_y(tmp.data(), out.plane(c), w, h, taps);
    }
    return out;
}

Image downsample(const Image& img) {
    const Image smooth = blur(img, kTap);
    const std::size_t w = img.width(), h = img.height();
    const std::size_t wn = (w + 1) / 2, hn = (h + 1) / 2;
    Image out(wn, hn, img.channels());
    for (std::size_t c = 0; c < img.channels(); ++c) {
        for (std::size_t y = 0; y < hn; ++y) {
            for (std::size_t x = 0; x < wn; ++x) {
                out.at(x, y, c) = smooth.at(2 * x, 2 * y, c);
            }
        }
    }
    return out;
}

Image upsample(const Image& img, std::size_t width, std::size_t height) {
    Image stuffed(width, height, img.channels());
    for (std::size_t c = 0; c < img.channels(); ++c) {
        for (std::size_t y = 0; y < img.height(); ++y) {
            for (std::size_t x = 0; x < img.width(); ++x) {
                stuffed.at(2 * x, 2 * y, c) = img.at(x, y, c);
            }
        }
    }
    return blur(stuffed, kTapUp);
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> pyramid_level_dims(
    std::size_t width, std::size_t height, std::size_t levels) {
    if (levels == 0) throw ValidationError("pyramid needs at least one level");
    if (width == 0 || height == 0) throw ShapeError("pyramid needs a nonempty frame");
    std::vector<std::pair<std::size_t, std::size_t>> dims;
    dims.reserve(levels);
    for (std::size_t s = 0; s < levels; ++s) {
        dims.emplace_back(width, height);
        width = (width + 1) / 2;
        height = (height + 1) / 2;
    }
    return dims;
}

PyramidStack build_pyramid(const Image& frame, std::size_t levels,
                           std::size_t min_dim) {
    const auto dims = pyramid_level_dims(frame.width(), frame.height(), levels);
    if (std::min(dims.back().first, dims.back().second) < min_dim) {
        throw PyramidDepthError("frame too small for requested pyramid depth");
    }

    PyramidStack stack;
    stack.levels.reserve(levels);
    Image current = frame;
    for (std::size_t s = 0; s + 1 < levels; ++s) {
        Image down = downsample(current);
        const Image up = upsample(down, current.width(), current.height());
        Image band(current.width(), current.height(), current.channels());
        for (std::size_t i = 0; i < band.pixel_count(); ++i) {
            band.values()[i] = current.values()[i] - up.values()[i];
        }
        stack.levels.push_back(std::move(band));
        current = std::move(down);
    }
    stack.levels.push_back(std::move(current));
    return stack;
}

Image collapse_pyramid(const PyramidStack& stack) {
    if (stack.levels.empty()) throw ValidationError("cannot collapse an empty pyramid");

    Image img = stack.levels.back();
    for (std::size_t s = stack.levels.size() - 1; s-- > 0;) {
        const Image& band = stack.levels[s];
        if (band.channels() != img.channels()) {
            throw ShapeError("pyramid levels disagree on channel count");
        }
        Image up = upsample(img, band.width(), band.height());
        for (std::size_t i = 0; i < up.pixel_count(); ++i) {
            up.values()[i] += band.values()[i];
        }
        img = std::move(up);
    }
    return img;
}

}  // namespace meb
