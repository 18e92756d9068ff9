#include "meb/clip_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include "meb/errors.hpp"

namespace meb {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// Raw frame: interleaved samples scaled to [0,1].
struct RawFrame {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 0;  // 1 or 3
    std::vector<double> samples;
};

// ---- filename pattern ----

struct Pattern {
    std::string prefix;
    std::string suffix;
    unsigned pad = 0;
};

Pattern parse_pattern(const std::string& pattern) {
    Pattern p;
    bool found = false;
    std::size_t i = 0;
    while (i < pattern.size()) {
        if (pattern[i] != '%') {
            (found ? p.suffix : p.prefix) += pattern[i++];
            continue;
        }
        if (found) throw ValidationError("pattern must contain exactly one %d placeholder");
        ++i;
        unsigned pad = 0;
        if (i < pattern.size() && pattern[i] == '0') {
            ++i;
            while (i < pattern.size() && pattern[i] >= '0' && pattern[i] <= '9') {
                pad = pad * 10 + static_cast<unsigned>(pattern[i++] - '0');
            }
        }
        if (i >= pattern.size() || pattern[i] != 'd') {
            throw ValidationError("pattern placeholder must be %d or %0Nd");
        }
        ++i;
        p.pad = pad;
        found = true;
    }
    if (!found) throw ValidationError("pattern must contain a %d placeholder");
    return p;
}

// ---- PNM ----

int pnm_token_int(std::istream& in, const std::filesystem::path& path) {
    // Skip whitespace and '#' comments.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || c < '0' || c > '9') {
        throw FormatError("malformed header: " + path.string());
    }
    long value = 0;
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000) throw FormatError("header value out of range: " + path.string());
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(value);
}

RawFrame read_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    char magic[2];
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6')) {
        throw FormatError("not a binary PNM file: " + path.string());
    }
    RawFrame frame;
    frame.channels = (magic[1] == '5') ? 1 : 3;
    frame.width = static_cast<std::size_t>(pnm_token_int(in, path));
    frame.height = static_cast<std::size_t>(pnm_token_int(in, path));
    const int maxval = pnm_token_int(in, path);
    if (frame.width == 0 || frame.height == 0 || maxval < 1 || maxval > 65535) {
        throw FormatError("unsupported PNM geometry: " + path.string());
    }
    in.get();  // single whitespace byte before the raster

    const std::size_t count = frame.width * frame.height * frame.channels;
    const std::size_t bytes_per_sample = (maxval > 255) ? 2 : 1;
    std::vector<unsigned char> raster(count * bytes_per_sample);
    in.read(reinterpret_cast<char*>(raster.data()),
            static_cast<std::streamsize>(raster.size()));
    if (static_cast<std::size_t>(in.gcount()) != raster.size()) {
        throw IoError("truncated PNM raster: " + path.string());
    }

    frame.samples.resize(count);
    const double scale = 1.0 / maxval;
    if (bytes_per_sample == 1) {
        for (std::size_t i = 0; i < count; ++i) frame.samples[i] = raster[i] * scale;
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned v = (static_cast<unsigned>(raster[2 * i]) << 8) | raster[2 * i + 1];
            frame.samples[i] = v * scale;
        }
    }
    return frame;
}

void write_pnm(const std::filesystem::path& path, std::size_t width, std::size_t height,
               std::size_t channels, const std::vector<std::uint16_t>& samples,
               unsigned bit_depth) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    const int maxval = (bit_depth == 16) ? 65535 : 255;
    out << (channels == 1 ? "P5" : "P6") << "\n" << width << " " << height << "\n"
        << maxval << "\n";
    std::vector<unsigned char> raster;
    raster.reserve(samples.size() * (bit_depth == 16 ? 2 : 1));
    for (std::uint16_t s : samples) {
        if (bit_depth == 16) raster.push_back(static_cast<unsigned char>(s >> 8));
        raster.push_back(static_cast<unsigned char>(s & 0xff));
    }
    out.write(reinterpret_cast<const char*>(raster.data()),
              static_cast<std::streamsize>(raster.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

// ---- PNG ----

RawFrame read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }

    RawFrame frame;
    std::vector<unsigned char> raster;
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("failed decoding PNG: " + path.string());
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_byte color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const png_byte out_color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if ((out_color != PNG_COLOR_TYPE_GRAY && out_color != PNG_COLOR_TYPE_RGB) ||
        (depth != 8 && depth != 16)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("unsupported PNG sample layout: " + path.string());
    }

    frame.width = png_get_image_width(png, info);
    frame.height = png_get_image_height(png, info);
    frame.channels = (out_color == PNG_COLOR_TYPE_GRAY) ? 1 : 3;

    const std::size_t stride = png_get_rowbytes(png, info);
    raster.resize(stride * frame.height);
    rows.resize(frame.height);
    for (std::size_t y = 0; y < frame.height; ++y) rows[y] = raster.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    const std::size_t count = frame.width * frame.height * frame.channels;
    frame.samples.resize(count);
    if (depth == 8) {
        for (std::size_t i = 0; i < count; ++i) frame.samples[i] = raster[i] / 255.0;
    } else {
        // PNG stores 16-bit samples most significant byte first.
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned v = (static_cast<unsigned>(raster[2 * i]) << 8) | raster[2 * i + 1];
            frame.samples[i] = v / 65535.0;
        }
    }
    return frame;
}

void write_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
               std::size_t channels, const std::vector<std::uint16_t>& samples,
               unsigned bit_depth) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open " + path.string() + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }

    const std::size_t bytes_per_sample = (bit_depth == 16) ? 2 : 1;
    std::vector<unsigned char> raster(width * height * channels * bytes_per_sample);
    std::vector<png_bytep> rows(height);
    const std::size_t stride = width * channels * bytes_per_sample;
    for (std::size_t y = 0; y < height; ++y) rows[y] = raster.data() + y * stride;
    std::size_t k = 0;
    for (std::uint16_t s : samples) {
        if (bit_depth == 16) raster[k++] = static_cast<unsigned char>(s >> 8);
        raster[k++] = static_cast<unsigned char>(s & 0xff);
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("failed writing PNG: " + path.string());
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
                 static_cast<int>(bit_depth),
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// ---- framing helpers ----

RawFrame read_frame(const std::filesystem::path& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open " + path.string());
    unsigned char head[2] = {0, 0};
    probe.read(reinterpret_cast<char*>(head), 2);
    probe.close();
    if (head[0] == 0x89 && head[1] == 'P') return read_png(path);
    if (head[0] == 'P' && (head[1] == '5' || head[1] == '6')) return read_pnm(path);
    throw FormatError("unrecognized frame format: " + path.string());
}

// Interleaved [0,1] samples -> planar frame with the requested channel count.
void store_frame(Clip& clip, std::size_t t, const RawFrame& raw) {
    const std::size_t px = raw.width * raw.height;
    double* dst = clip.frame_data(t);
    if (raw.channels == clip.channels()) {
        for (std::size_t c = 0; c < raw.channels; ++c) {
            for (std::size_t i = 0; i < px; ++i) {
                dst[c * px + i] = raw.samples[i * raw.channels + c];
            }
        }
    } else if (raw.channels == 3 && clip.channels() == 1) {
        for (std::size_t i = 0; i < px; ++i) {
            const double* s = &raw.samples[i * 3];
            dst[i] = 0.299 * s[0] + 0.587 * s[1] + 0.114 * s[2];
        }
    } else {  // gray file, rgb requested
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t i = 0; i < px; ++i) dst[c * px + i] = raw.samples[i];
        }
    }
}

enum class FrameFormat { png, pgm, ppm, pnm };

FrameFormat save_format(const ClipManifest& manifest, std::size_t channels) {
    std::string ext = frame_path(manifest, 0).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png") return FrameFormat::png;
    if (ext == ".pgm") {
        if (channels != 1) throw ShapeError(".pgm holds a single channel");
        return FrameFormat::pgm;
    }
    if (ext == ".ppm") {
        if (channels != 3) throw ShapeError(".ppm holds three channels");
        return FrameFormat::ppm;
    }
    if (ext == ".pnm") return FrameFormat::pnm;
    throw FormatError("unsupported frame extension: " + ext);
}

}  // namespace

std::filesystem::path frame_path(const ClipManifest& manifest, std::size_t index) {
    const Pattern p = parse_pattern(manifest.pattern);
    std::string digits = std::to_string(index);
    if (digits.size() < p.pad) digits.insert(0, p.pad - digits.size(), '0');
    return manifest.directory / (p.prefix + digits + p.suffix);
}

std::size_t probe_frame_count(const ClipManifest& manifest) {
    std::size_t n = 0;
    while (std::filesystem::exists(frame_path(manifest, n))) ++n;
    return n;
}

Clip load_clip(const ClipManifest& manifest) {
    if (manifest.channels != 1 && manifest.channels != 3) {
        throw ValidationError("manifest channels must be 1 (gray) or 3 (rgb)");
    }
    const std::size_t frames =
        manifest.frames ? manifest.frames : probe_frame_count(manifest);
    if (frames == 0) {
        throw EmptyClipError("no frames found under " + manifest.directory.string());
    }

    Clip clip(1, 1, 1, 1);
    bool first = true;
    for (std::size_t t = 0; t < frames; ++t) {
        const std::filesystem::path path = frame_path(manifest, t);
        if (!std::filesystem::exists(path)) {
            throw IoError("frame " + std::to_string(t) + " missing: " + path.string());
        }
        const RawFrame raw = read_frame(path);
        if (first) {
            clip = Clip(raw.width, raw.height, manifest.channels, frames);
            first = false;
        } else if (raw.width != clip.width() || raw.height != clip.height()) {
            throw FormatError("frame " + std::to_string(t) +
                              " dimensions differ from frame 0: " + path.string());
        }
        store_frame(clip, t, raw);
    }
    return clip;
}

void save_clip(const Clip& clip, const ClipManifest& manifest) {
    if (manifest.channels != clip.channels()) {
        throw ShapeError("manifest channels disagree with the clip");
    }
    if (manifest.bit_depth != 8 && manifest.bit_depth != 16) {
        throw ValidationError("bit depth must be 8 or 16");
    }
    const FrameFormat format = save_format(manifest, clip.channels());
    std::filesystem::create_directories(manifest.directory);

    const std::size_t px = clip.width() * clip.height();
    const double maxval = (manifest.bit_depth == 16) ? 65535.0 : 255.0;
    std::vector<std::uint16_t> samples(px * clip.channels());

    for (std::size_t t = 0; t < clip.frames(); ++t) {
        const double* src = clip.frame_data(t);
        for (std::size_t i = 0; i < px; ++i) {
            for (std::size_t c = 0; c < clip.channels(); ++c) {
                const double v = std::clamp(src[c * px + i], 0.0, 1.0);
                samples[i * clip.channels() + c] =
                    static_cast<std::uint16_t>(std::lround(v * maxval));
            }
        }
        const std::filesystem::path path = frame_path(manifest, t);
        if (format == FrameFormat::png) {
            write_png(path, clip.width(), clip.height(), clip.channels(), samples,
                      manifest.bit_depth);
        } else {
            write_pnm(path, clip.width(), clip.height(), clip.channels(), samples,
                      manifest.bit_depth);
        }
    }
}

}  // namespace meb
