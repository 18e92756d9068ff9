#pragma once

#include <cstddef>

#include "meb/clip.hpp"
#include "meb/matrix.hpp"

namespace meb {

/// Temporal magnification parameters.  Two first-order IIR low-pass filters
/// with smoothing factors w1 > w2 form a band-pass whose output is scaled by
/// alpha and added back to the input.
struct MagnifyParams {
    double alpha = 16.0;
    double w1 = 0.4;
    double w2 = 0.05;

    MagnifyParams() = default;
    MagnifyParams(double alpha, double w1, double w2);
};

/// Builds the T x T matrix W such that applying the recursive band-pass
/// magnifier to a length-T signal equals multiplying by W.  Upper
/// triangular; every column sums to 1.
Matrix build_magnification_matrix(std::size_t frames, const MagnifyParams& params);

/// Reference implementation: runs the two IIR low-pass recursions frame by
/// frame and adds the scaled difference back to the input.  Used as the
/// ground truth the matrix form is tested against.
Clip oracle_magnify(const Clip& clip, const MagnifyParams& params);

/// Magnitude response |1 + alpha*(H1(omega) - H2(omega))| of the band-pass
/// magnifier at angular frequency omega in [0, pi].  Exactly 1 at omega = 0.
double filter_gain(const MagnifyParams& params, double omega);

}  // namespace meb
