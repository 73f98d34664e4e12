#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "hypermaps/colored.hpp"
#include "hypermaps/perm.hpp"

namespace test_helpers {

inline hypermaps::Permutation perm(int degree, const std::vector<std::vector<int>>& cycles) {
    return hypermaps::Permutation::from_cycles(degree, cycles);
}

/// [3]-colored graph on 8 vertices: vertex v-1 read as three bits, color c in
/// {0,1,2} flips bit c, color 3 flips all three. Connected, bipartite.
inline hypermaps::ColoredGraph cube_graph() {
    std::vector<hypermaps::Permutation> matchings;
    for (int mask : {1, 2, 4, 7}) {
        std::vector<int> images(8);
        for (int v = 1; v <= 8; ++v) images[static_cast<std::size_t>(v) - 1] = ((v - 1) ^ mask) + 1;
        matchings.push_back(hypermaps::Permutation::from_images(std::move(images)));
    }
    return hypermaps::ColoredGraph(std::move(matchings));
}

/// Independent orbit oracle: plain closure by repeated application of the
/// generators, no union-find. Returns the sorted orbit of `start`.
inline std::vector<int> closure(const std::vector<hypermaps::Permutation>& generators, int start) {
    std::set<int> seen{start};
    std::vector<int> frontier{start};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (const auto& g : generators) {
            for (int y : {g(x), g.inverse()(x)}) {
                if (seen.insert(y).second) frontier.push_back(y);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

/// Number of distinct closures over the whole domain.
inline int closure_count(const std::vector<hypermaps::Permutation>& generators, int domain_size) {
    std::set<std::vector<int>> blocks;
    for (int x = 1; x <= domain_size; ++x) blocks.insert(closure(generators, x));
    return static_cast<int>(blocks.size());
}

}  // namespace test_helpers
