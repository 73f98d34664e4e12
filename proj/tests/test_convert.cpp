#include <map>

#include "doctest.h"

#include "helpers.hpp"
#include "hypermaps/convert.hpp"
#include "hypermaps/examples.hpp"
#include "hypermaps/isomorphism.hpp"

using namespace hypermaps;
using test_helpers::perm;

TEST_CASE("doubling the oriented model") {
    auto doubled = sigma_to_tau(examples::sphere_hypermap_sigma());
    CHECK(doubled.n_flags() == 6);
    CHECK(cells(doubled, CellType::vertex).size() == 1);
    CHECK(cells(doubled, CellType::hyperedge).size() == 1);
    CHECK(cells(doubled, CellType::face).size() == 3);
    CHECK(euler_characteristic(doubled) == 2);
    CHECK(is_orientable(doubled));

    auto trivial = sigma_to_tau(OrientedHypermap::make(Permutation::identity(1),
                                                       Permutation::identity(1)));
    CHECK(trivial.n_flags() == 2);
    CHECK(trivial.tau(0) == perm(2, {{1, 2}}));
    CHECK(trivial.tau(1) == perm(2, {{1, 2}}));
    CHECK(trivial.tau(2) == perm(2, {{1, 2}}));

    // The sphere map with compacted half-edge labels doubles to a hypermap
    // isomorphic to its flag model.
    auto compact = OrientedHypermap::make(perm(6, {{1, 2, 3}, {4, 5, 6}}),
                                          perm(6, {{1, 4}, {2, 6}, {3, 5}}));
    auto doubled_map = sigma_to_tau(compact);
    CHECK(doubled_map.n_flags() == 12);
    CHECK(are_isomorphic(tau_to_colored(doubled_map),
                         tau_to_colored(examples::sphere_map()))
              .has_value());
}

TEST_CASE("orienting the flag model") {
    auto m1 = tau_to_sigma(examples::sphere_map());
    CHECK(m1.plus_orbit == std::vector<int>{1, 3, 5, 7, 8, 12});
    CHECK(m1.hypermap.sigma_v() == perm(12, {{1, 3, 5}, {7, 8, 12}}));
    CHECK(m1.hypermap.sigma_e() == perm(12, {{1, 7}, {3, 12}, {5, 8}}));
    CHECK(m1.hypermap.sigma_f() == perm(12, {{1, 12}, {3, 8}, {5, 7}}));
    CHECK(m1.hypermap == examples::sphere_map_sigma());

    auto hm1 = tau_to_sigma(examples::sphere_hypermap());
    CHECK(hm1.plus_orbit == std::vector<int>{1, 3, 5});
    CHECK(hm1.hypermap.sigma_v() == perm(6, {{1, 3, 5}}));
    CHECK(hm1.hypermap.sigma_e() == perm(6, {{1, 5, 3}}));
    CHECK(hm1.hypermap.sigma_f() == Permutation::identity(6));

    CHECK_THROWS_AS(tau_to_sigma(examples::projective_hypermap()), NotOrientable);
    CHECK_THROWS_AS(tau_to_sigma(examples::projective_map()), NotOrientable);
}

TEST_CASE("doubling then orienting compacts back") {
    auto hm = examples::sphere_hypermap_sigma();
    auto converted = tau_to_sigma(sigma_to_tau(hm));
    CHECK(converted.plus_orbit == std::vector<int>{1, 3, 5});
    // Flag 2i-1 stands for half-edge i.
    for (int i = 1; i <= hm.n_halfedges(); ++i) {
        CHECK(converted.hypermap.sigma_v()(2 * i - 1) == 2 * hm.sigma_v()(i) - 1);
        CHECK(converted.hypermap.sigma_e()(2 * i - 1) == 2 * hm.sigma_e()(i) - 1);
    }
}

TEST_CASE("reversal doubles to an isomorphic hypermap") {
    auto hm = examples::sphere_map_sigma();
    CHECK(are_isomorphic(tau_to_colored(sigma_to_tau(reverse_orientation(hm))),
                         tau_to_colored(sigma_to_tau(hm)))
              .has_value());
}

TEST_CASE("colored graph reinterpretation") {
    auto hm0 = examples::projective_hypermap();
    auto graph = tau_to_colored(hm0);
    CHECK(graph.matching(0) == hm0.tau(0));
    CHECK(graph.matching(1) == hm0.tau(1));
    CHECK(graph.matching(2) == hm0.tau(2));
    // Flags 1 and 2 are joined by both color 0 and color 1.
    CHECK(graph.matching(0)(1) == 2);
    CHECK(graph.matching(1)(1) == 2);

    CHECK(colored_to_tau(tau_to_colored(examples::sphere_map())) == examples::sphere_map());
    CHECK(is_bipartite(tau_to_colored(examples::sphere_hypermap())));

    CHECK_THROWS_AS(colored_to_tau(test_helpers::cube_graph()), BadDimension);
}

TEST_CASE("duality commutes with conversion") {
    auto hm = examples::sphere_map_sigma();
    std::vector<int> left_vertex{1};
    auto sigma_route = sigma_to_tau(partial_dual(hm, CellType::vertex, left_vertex));

    auto doubled = sigma_to_tau(hm);
    // Half-edge 1 carries flag 1; find the vertex cell holding it.
    int tau_cell = 0;
    for (const auto& cell : cells(doubled, CellType::vertex))
        for (int x : cell.members)
            if (x == 1) tau_cell = cell.ref.canonical_id;
    std::vector<int> tau_ids{tau_cell};
    auto tau_route = partial_dual(doubled, CellType::vertex, tau_ids);

    CHECK(are_isomorphic(tau_to_colored(sigma_route), tau_to_colored(tau_route)).has_value());
}

TEST_CASE("Euler characteristic agrees across the models") {
    for (const auto& [name, hm] : examples::all_flag_examples()) {
        CAPTURE(name);
        CHECK(euler_characteristic(hm) == euler_characteristic_2d(tau_to_colored(hm)));
    }
    auto oriented = tau_to_sigma(examples::sphere_map()).hypermap;
    auto per_component = euler_by_component(oriented);
    CHECK(std::map<int, int>(per_component.begin(), per_component.end()).at(1) ==
          euler_characteristic(examples::sphere_map()));
}
