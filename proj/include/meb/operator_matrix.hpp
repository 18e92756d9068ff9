#pragma once

#include <cstddef>
#include <cstdint>

#include "meb/matrix.hpp"

namespace meb {

enum class OperatorRole : std::uint8_t {
    magnify = 0,
    interpolate = 1,
    fused = 2,
};

const char* to_string(OperatorRole role);

/// A precomputed T x T' operator together with the parameters that produced
/// it.  Every column sums to 1 (constant clips are fixed points).  For the
/// interpolate role alpha/w1/w2 carry no meaning and are stored as zero.
struct OperatorMatrix {
    Matrix matrix;
    OperatorRole role;
    std::size_t t_in;
    std::size_t t_out;
    double alpha = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
};

}  // namespace meb
