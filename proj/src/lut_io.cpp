#include "meb/lut_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "meb/errors.hpp"

namespace meb {

namespace {

constexpr char kMagic[4] = {'M', 'E', 'B', 'W'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

void put_f64(std::string& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((bits >> (8 * k)) & 0xff));
}

void read_exact(std::istream& in, unsigned char* dst, std::size_t n,
                const std::filesystem::path& path) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
        throw IoError("truncated LUT file: " + path.string());
    }
}

std::uint32_t take_u32(std::istream& in, const std::filesystem::path& path) {
    unsigned char b[4];
    read_exact(in, b, 4, path);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

double take_f64(std::istream& in, const std::filesystem::path& path) {
    unsigned char b[8];
    read_exact(in, b, 8, path);
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    return std::bit_cast<double>(bits);
}

}  // namespace

void write_lut(const OperatorMatrix& w, const std::filesystem::path& path) {
    if (w.matrix.rows() != w.t_in || w.matrix.cols() != w.t_out) {
        throw ShapeError("operator matrix dimensions disagree with t_in/t_out");
    }
    for (double v : {w.alpha, w.w1, w.w2}) {
        if (!std::isfinite(v)) throw NumericError("LUT parameters must be finite");
    }
    for (std::size_t i = 0; i < w.t_in * w.t_out; ++i) {
        if (!std::isfinite(w.matrix.data()[i])) {
            throw NumericError("LUT entries must be finite");
        }
    }

    std::string bytes;
    bytes.reserve(33 + 8 * w.t_in * w.t_out);
    bytes.append(kMagic, 4);
    put_u32(bytes, kVersion);
    bytes.push_back(static_cast<char>(w.role));
    put_u32(bytes, static_cast<std::uint32_t>(w.t_in));
    put_u32(bytes, static_cast<std::uint32_t>(w.t_out));
    put_f64(bytes, w.alpha);
    put_f64(bytes, w.w1);
    put_f64(bytes, w.w2);
    for (std::size_t i = 0; i < w.t_in * w.t_out; ++i) put_f64(bytes, w.matrix.data()[i]);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open LUT file for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("failed writing LUT file: " + path.string());
}

OperatorMatrix read_lut(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open LUT file: " + path.string());

    unsigned char magic[4];
    read_exact(in, magic, 4, path);
    if (std::memcmp(magic, kMagic, 4) != 0) {
        throw FormatError("not a LUT file (bad magic, expected MEBW): " + path.string());
    }
    const std::uint32_t version = take_u32(in, path);
    if (version != kVersion) {
        throw FormatError("unsupported LUT version " + std::to_string(version) + ": " +
                          path.string());
    }
    unsigned char role_byte;
    read_exact(in, &role_byte, 1, path);
    if (role_byte > 2) {
        throw FormatError("unknown operator role " + std::to_string(role_byte) + ": " +
                          path.string());
    }
    const std::uint32_t t_in = take_u32(in, path);
    const std::uint32_t t_out = take_u32(in, path);
    if (t_in == 0 || t_out == 0) {
        throw FormatError("LUT declares an empty operator: " + path.string());
    }
    const double alpha = take_f64(in, path);
    const double w1 = take_f64(in, path);
    const double w2 = take_f64(in, path);

    Matrix m(t_in, t_out);
    for (std::size_t r = 0; r < t_in; ++r) {
        for (std::size_t c = 0; c < t_out; ++c) m(r, c) = take_f64(in, path);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw FormatError("trailing bytes after LUT payload: " + path.string());
    }
    return OperatorMatrix{std::move(m), static_cast<OperatorRole>(role_byte),
                          t_in, t_out, alpha, w1, w2};
}

}  // namespace meb
