#pragma once

#include <filesystem>

#include "meb/operator_matrix.hpp"

namespace meb {

/// Serializes an operator to the binary LUT format:
/// magic "MEBW", version u32 = 1, role u8, t_in u32, t_out u32,
/// alpha f64, w1 f64, w2 f64, then t_in*t_out f64 entries row-major.
/// All fields little-endian regardless of host byte order.
void write_lut(const OperatorMatrix& w, const std::filesystem::path& path);

/// Reads a LUT file back; read_lut(write_lut(w)) is bit-identical.
OperatorMatrix read_lut(const std::filesystem::path& path);

}  // namespace meb
