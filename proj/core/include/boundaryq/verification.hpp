#pragma once

#include <string>
#include <vector>

namespace boundaryq {

struct IdentityResult {
    std::string identity; // e.g. "conjugate_check"
    int n = 0;
    bool pass = false;
    std::string detail; // residual or mismatch description
};

struct VerifyOptions {
    int n_max = 6;
    /// Fault injection: adds this offset to one cascade angle before the
    /// conjugation check, to prove the harness catches a broken cascade.
    double perturb_cascade_angle = 0.0;
    /// Evolution identity is checked up to min(n_max, evolution_n_max).
    int evolution_n_max = 8;
    std::uint64_t seed = 0x5eed;
};

/// The full identity suite for n = 1..n_max: three-way construction
/// equality, nilpotency, parity anticommutation, pairwise Q_i
/// anticommutation, conjugate_check, projector reconstruction, and the
/// evolution identity against the dense matrix-exponential oracle.
std::vector<IdentityResult> run_identity_suite(const VerifyOptions& options);

bool all_passed(const std::vector<IdentityResult>& results);

} // namespace boundaryq
