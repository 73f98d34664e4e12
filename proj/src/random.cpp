#include "hypermaps/random.hpp"

#include <numeric>

#include "hypermaps/errors.hpp"

namespace hypermaps {

namespace {

std::vector<int> shuffled_labels(int n, Lcg64& rng) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(labels[static_cast<std::size_t>(i)], labels[j]);
    }
    return labels;
}

}  // namespace

Permutation random_permutation(int n, Lcg64& rng) {
    if (n < 1) throw BadSize("permutation degree must be at least 1");
    return Permutation::from_images(shuffled_labels(n, rng));
}

Permutation random_matching(int n, Lcg64& rng) {
    if (n < 2 || n % 2 != 0) throw BadSize("a perfect matching needs an even size of at least 2");
    auto labels = shuffled_labels(n, rng);
    std::vector<std::vector<int>> pairs;
    for (std::size_t i = 0; i < labels.size(); i += 2)
        pairs.push_back({labels[i], labels[i + 1]});
    return Permutation::from_cycles(n, pairs);
}

FlagHypermap random_flag_hypermap(int n_flags, std::uint64_t seed, bool connected, int max_retries) {
    if (n_flags < 2 || n_flags % 2 != 0)
        throw BadSize("flag count must be even and at least 2, got " + std::to_string(n_flags));
    Lcg64 rng(seed);
    for (int attempt = 0; attempt < (connected ? max_retries : 1); ++attempt) {
        Permutation t0 = random_matching(n_flags, rng);
        Permutation t1 = random_matching(n_flags, rng);
        Permutation t2 = random_matching(n_flags, rng);
        FlagHypermap hm(std::move(t0), std::move(t1), std::move(t2));
        if (!connected || is_connected(hm)) return hm;
    }
    throw GenerationFailed("no connected hypermap with " + std::to_string(n_flags) + " flags after " +
                           std::to_string(max_retries) + " attempts (seed " + std::to_string(seed) + ")");
}

OrientedHypermap random_oriented_hypermap(int n, std::uint64_t seed) {
    if (n < 1) throw BadSize("half-edge count must be at least 1");
    Lcg64 rng(seed);
    Permutation sigma_v = random_permutation(n, rng);
    Permutation sigma_e = random_permutation(n, rng);
    return OrientedHypermap::make(sigma_v, sigma_e);
}

}  // namespace hypermaps
