#pragma once

#include <cstdint>

namespace boundaryq {

/// xoshiro256++ with splitmix64 seeding. Small, fast, and fully specified so
/// that every sampled estimate is reproducible from a 64-bit seed alone.
/// (std:: distributions are not used anywhere: their streams are
/// implementation-defined.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Standard normal via Box-Muller; draws two uniforms per pair.
    double next_normal();

  private:
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Deterministically derives an independent child seed from a base seed and
/// up to three tag words (splitmix64 chaining).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

} // namespace boundaryq
