#include "hypermaps/convert.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hypermaps/errors.hpp"

namespace hypermaps {

FlagHypermap sigma_to_tau(const OrientedHypermap& hm) {
    const int n = hm.n_halfedges();
    const Permutation& sv = hm.sigma_v();
    const Permutation& se = hm.sigma_e();
    const Permutation sv_inv = sv.inverse();
    const Permutation se_inv = se.inverse();

    std::vector<int> t0(static_cast<std::size_t>(2 * n));
    std::vector<int> t1(static_cast<std::size_t>(2 * n));
    std::vector<int> t2(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const std::size_t plus = static_cast<std::size_t>(2 * i - 1) - 1;
        const std::size_t minus = static_cast<std::size_t>(2 * i) - 1;
        t2[plus] = 2 * i;
        t2[minus] = 2 * i - 1;
        t0[minus] = 2 * se(i) - 1;
        t0[plus] = 2 * se_inv(i);
        t1[minus] = 2 * sv_inv(i) - 1;
        t1[plus] = 2 * sv(i);
    }
    return FlagHypermap(Permutation::from_images(std::move(t0)),
                        Permutation::from_images(std::move(t1)),
                        Permutation::from_images(std::move(t2)));
}

TauToSigmaResult tau_to_sigma(const FlagHypermap& hm) {
    const Permutation v_word = hm.tau(2) * hm.tau(1);
    const Permutation e_word = hm.tau(0) * hm.tau(2);
    const Permutation f_word = hm.tau(1) * hm.tau(0);

    const std::array<Permutation, 2> even_gens{v_word, e_word};
    auto even = orbits(even_gens, hm.n_flags());
    std::vector<int> even_of(static_cast<std::size_t>(hm.n_flags()) + 1, -1);
    for (std::size_t b = 0; b < even.size(); ++b)
        for (int x : even[b]) even_of[static_cast<std::size_t>(x)] = static_cast<int>(b);

    std::vector<int> plus_orbit;
    for (const auto& comp : components(hm)) {
        std::set<int> orbit_ids;
        for (int x : comp) orbit_ids.insert(even_of[static_cast<std::size_t>(x)]);
        if (orbit_ids.size() != 2)
            throw NotOrientable("component containing flag " + std::to_string(comp.front()) +
                                " is non-orientable");
        const int plus_block = even_of[static_cast<std::size_t>(comp.front())];
        for (int x : comp)
            if (even_of[static_cast<std::size_t>(x)] == plus_block) plus_orbit.push_back(x);
    }
    std::sort(plus_orbit.begin(), plus_orbit.end());

    OrientedHypermap result(restrict_to(v_word, plus_orbit), restrict_to(e_word, plus_orbit),
                            restrict_to(f_word, plus_orbit));
    return TauToSigmaResult{std::move(result), std::move(plus_orbit)};
}

ColoredGraph tau_to_colored(const FlagHypermap& hm) {
    return ColoredGraph({hm.tau(0), hm.tau(1), hm.tau(2)});
}

FlagHypermap colored_to_tau(const ColoredGraph& g) {
    if (g.dimension() != 2)
        throw BadDimension("a hypermap needs a [2]-colored graph, got dimension " +
                           std::to_string(g.dimension()));
    return FlagHypermap(g.matching(0), g.matching(1), g.matching(2));
}

}  // namespace hypermaps
