#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace meb {

/// Outcome of one randomized invariant suite.  On failure, detail names the
/// violated property and the instance seed that reproduces it.
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    bool passed = true;
    std::string detail;
};

/// Fused operator application vs the two sequential reference
/// implementations, 1e-8 max abs tolerance on randomized clips and params.
SuiteResult oracle_equivalence_suite(std::uint64_t seed, std::size_t instances = 200,
                                     int threads = 1);

/// alpha = 0 gives the exact identity; equal in/out lengths give the
/// identity re-sampler; the full pyramid pipeline preserves clips under both.
SuiteResult identity_degeneration_suite(std::uint64_t seed);

/// Every operator column sums to 1 within 1e-9; the magnification operator
/// is exactly upper triangular; the re-sampler's last column picks the last
/// input frame.
SuiteResult column_sum_suite(std::uint64_t seed, std::size_t instances = 60);

/// Sampled latent curves are orthogonal: Y * Y^T = (T/2) * I within 1e-9 for
/// every T up to max_frames.
SuiteResult orthogonality_suite(std::size_t max_frames = 256);

/// build/collapse round trip within 1e-6 on random images.
SuiteResult pyramid_roundtrip_suite(std::uint64_t seed, std::size_t instances = 100);

/// Column sums of an operator loaded from a LUT file.
SuiteResult lut_column_sum_suite(const std::filesystem::path& path);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int threads = 1);

}  // namespace meb
