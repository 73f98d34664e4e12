#include "doctest.h"

#include "helpers.hpp"
#include "hypermaps/random.hpp"

using namespace hypermaps;

TEST_CASE("the generator is the documented linear recurrence") {
    Lcg64 rng(1);
    std::uint64_t state = 1;
    for (int i = 0; i < 8; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        CHECK(rng.next() == state);
    }
    Lcg64 bounded(42);
    for (int i = 0; i < 100; ++i) CHECK(bounded.below(7) < 7);
}

TEST_CASE("random flag hypermaps") {
    auto a = random_flag_hypermap(6, 1);
    auto b = random_flag_hypermap(6, 1);
    CHECK(a == b);
    CHECK_FALSE(random_flag_hypermap(6, 2) == a);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto hm = random_flag_hypermap(12, seed);
        for (int i = 0; i < 3; ++i) {
            CHECK(hm.tau(i).is_involution());
            CHECK(hm.tau(i).is_fixed_point_free());
        }
    }

    // Two flags admit a single hypermap: every involution is (1 2).
    auto smallest = random_flag_hypermap(2, 999);
    CHECK(smallest.tau(0) == Permutation::transposition(2, 1, 2));
    CHECK(smallest.tau(1) == Permutation::transposition(2, 1, 2));
    CHECK(smallest.tau(2) == Permutation::transposition(2, 1, 2));
    CHECK(euler_characteristic(smallest) == 2);

    CHECK_THROWS_AS(random_flag_hypermap(7, 1), BadSize);
    CHECK_THROWS_AS(random_flag_hypermap(0, 1), BadSize);

    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(is_connected(random_flag_hypermap(16, seed, true)));
    CHECK_THROWS_AS(random_flag_hypermap(16, 1, true, 0), GenerationFailed);
}

TEST_CASE("random oriented hypermaps") {
    auto a = random_oriented_hypermap(9, 5);
    CHECK(a == random_oriented_hypermap(9, 5));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto hm = random_oriented_hypermap(1 + static_cast<int>(seed % 11), seed);
        CHECK((hm.sigma_f() * hm.sigma_e() * hm.sigma_v()).is_identity());
    }
    auto trivial = random_oriented_hypermap(1, 3);
    CHECK(trivial.sigma_v() == Permutation::identity(1));
    CHECK(trivial.sigma_e() == Permutation::identity(1));
    CHECK(trivial.sigma_f() == Permutation::identity(1));
}
