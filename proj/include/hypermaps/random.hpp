#pragma once

#include <cstdint>

#include "hypermaps/sigma.hpp"
#include "hypermaps/tau.hpp"

namespace hypermaps {

/// 64-bit linear congruential generator,
///     state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64).
/// Draws take the top 32 bits; below(n) is next_u32() % n. The algorithm is
/// fixed so a failure reproduces from its seed in any implementation.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    std::uint32_t next_u32() { return static_cast<std::uint32_t>(next() >> 32); }

    /// Uniform-ish value in {0..n-1}; n must be positive.
    std::uint64_t below(std::uint64_t n) { return next_u32() % n; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle of {1..n} read as an image table.
Permutation random_permutation(int n, Lcg64& rng);

/// Uniform perfect matching on {1..n} (n even): shuffle, then pair
/// consecutive entries.
Permutation random_matching(int n, Lcg64& rng);

/// Three independent uniform matchings. With connected=true, redraws until
/// the hypermap is connected, throwing GenerationFailed after max_retries.
FlagHypermap random_flag_hypermap(int n_flags, std::uint64_t seed, bool connected = false,
                                  int max_retries = 1000);

/// Uniform sigma_v and sigma_e; sigma_f is derived from the relation.
OrientedHypermap random_oriented_hypermap(int n, std::uint64_t seed);

}  // namespace hypermaps
