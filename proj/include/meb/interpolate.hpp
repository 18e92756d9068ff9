#pragma once

#include <cstddef>

#include "meb/clip.hpp"
#include "meb/matrix.hpp"

namespace meb {

/// Value of the k-th latent basis curve at time t in (0, 1].  The curves are
/// phase-shifted sines chosen so that sampling curve k at t = i/T gives the
/// k-th eigenvector of the length-T path-graph Laplacian.
double latent_curve(std::size_t k, double t, std::size_t frames);

/// (T-1) x n matrix whose (k, j) entry samples curve k+1 at t = (j+1)/n.
/// With n = frames the rows are orthogonal: Y * Y^T = (T/2) * I.
Matrix build_curve_matrix(std::size_t frames, std::size_t samples);

/// Builds the T x T' interpolation operator: project the clip onto the latent
/// curves sampled at the T input times (least squares, after removing the
/// temporal mean), then re-sample the curves at T' uniform output times and
/// add the mean back.  Every column sums to 1; with T' = T it is the
/// identity, and the last column is always the last input frame.
Matrix build_interpolation_matrix(std::size_t frames_in, std::size_t frames_out);

/// Reference implementation: least-squares fit of per-pixel curve
/// coefficients followed by explicit re-sampling.  Ground truth for the
/// matrix form.
Clip oracle_interpolate(const Clip& clip, std::size_t frames_out);

}  // namespace meb
