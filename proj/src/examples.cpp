#include "hypermaps/examples.hpp"

namespace hypermaps::examples {

namespace {

Permutation cycles(int degree, const std::vector<std::vector<int>>& c) {
    return Permutation::from_cycles(degree, c);
}

}  // namespace

FlagHypermap projective_map() {
    return FlagHypermap(cycles(12, {{1, 11}, {2, 12}, {3, 10}, {4, 9}, {5, 8}, {6, 7}}),
                        cycles(12, {{1, 2}, {3, 4}, {5, 6}, {7, 9}, {8, 10}, {11, 12}}),
                        cycles(12, {{1, 6}, {2, 3}, {4, 5}, {7, 11}, {8, 9}, {10, 12}}));
}

FlagHypermap projective_hypermap() {
    return FlagHypermap(cycles(6, {{1, 2}, {3, 5}, {4, 6}}),
                        cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                        cycles(6, {{1, 6}, {2, 3}, {4, 5}}));
}

FlagHypermap sphere_map() {
    return FlagHypermap(cycles(12, {{1, 11}, {2, 12}, {3, 10}, {4, 8}, {5, 9}, {6, 7}}),
                        cycles(12, {{1, 2}, {3, 4}, {5, 6}, {7, 9}, {8, 10}, {11, 12}}),
                        cycles(12, {{1, 6}, {2, 3}, {4, 5}, {7, 11}, {8, 9}, {10, 12}}));
}

FlagHypermap sphere_hypermap() {
    return FlagHypermap(cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                        cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                        cycles(6, {{1, 6}, {2, 3}, {4, 5}}));
}

OrientedHypermap sphere_map_sigma() {
    return OrientedHypermap(cycles(12, {{1, 3, 5}, {7, 8, 12}}),
                            cycles(12, {{1, 7}, {3, 12}, {5, 8}}),
                            cycles(12, {{1, 12}, {3, 8}, {5, 7}}));
}

OrientedHypermap sphere_hypermap_sigma() {
    return OrientedHypermap(cycles(3, {{1, 2, 3}}), cycles(3, {{1, 3, 2}}), Permutation::identity(3));
}

std::vector<std::pair<std::string, FlagHypermap>> all_flag_examples() {
    return {{"projective_map", projective_map()},
            {"projective_hypermap", projective_hypermap()},
            {"sphere_map", sphere_map()},
            {"sphere_hypermap", sphere_hypermap()}};
}

std::vector<std::pair<std::string, OrientedHypermap>> all_oriented_examples() {
    return {{"sphere_map", sphere_map_sigma()}, {"sphere_hypermap", sphere_hypermap_sigma()}};
}

}  // namespace hypermaps::examples
