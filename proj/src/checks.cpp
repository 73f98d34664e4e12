#include "hypermaps/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hypermaps/convert.hpp"
#include "hypermaps/isomorphism.hpp"

namespace hypermaps::checks {

namespace {

std::set<int> selected_flags(const FlagHypermap& hm, CellType t, std::span<const int> ids) {
    std::set<int> wanted(ids.begin(), ids.end());
    std::set<int> flags;
    for (const auto& cell : cells(hm, t))
        if (wanted.count(cell.ref.canonical_id)) flags.insert(cell.members.begin(), cell.members.end());
    return flags;
}

/// Product of the transpositions of an involution that lie inside a flag set.
Permutation transpositions_within(const Permutation& p, const std::set<int>& flags) {
    std::vector<std::vector<int>> pairs;
    for (int x : flags)
        if (x < p(x)) pairs.push_back({x, p(x)});
    return Permutation::from_cycles(p.degree(), pairs);
}

std::map<int, int> as_map(const std::vector<std::pair<int, int>>& pairs) {
    return {pairs.begin(), pairs.end()};
}

}  // namespace

bool tau_double_dual(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                     const FlagHypermap& dual) {
    return partial_dual(dual, t, ids) == hm;
}

bool tau_dual_product_form(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                           const FlagHypermap& dual) {
    auto flags = selected_flags(hm, t, ids);
    auto [a, b] = involution_pair(t);
    Permutation a_sel = transpositions_within(hm.tau(a), flags);
    Permutation b_sel = transpositions_within(hm.tau(b), flags);
    Permutation expect_a = hm.tau(a) * a_sel * b_sel;
    Permutation expect_b = hm.tau(b) * b_sel * a_sel;
    int other = 3 - a - b;
    return dual.tau(a) == expect_a && dual.tau(b) == expect_b && dual.tau(other) == hm.tau(other);
}

bool tau_cell_supports_preserved(const FlagHypermap& hm, CellType t, const FlagHypermap& dual) {
    auto before = cells(hm, t);
    auto after = cells(dual, t);
    if (before.size() != after.size()) return false;
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i].members != after[i].members || before[i].valency != after[i].valency)
            return false;
    return true;
}

bool orientability_preserved(const FlagHypermap& hm, const FlagHypermap& dual) {
    return is_orientable(hm) == is_orientable(dual);
}

bool colored_swap_matches_tau_dual(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                                   const FlagHypermap& dual) {
    auto [a, b] = involution_pair(t);
    ColoredGraph graph = tau_to_colored(hm);
    std::vector<int> bubble_ids(ids.begin(), ids.end());
    ColoredGraph swapped = swap_colors_in_bubbles(graph, a, b, bubble_ids);
    if (!(colored_to_tau(swapped) == dual)) return false;
    if (edge_multiset(swapped) != edge_multiset(graph)) return false;
    // Swapping again with the same bubble ids restores the graph.
    return swap_colors_in_bubbles(swapped, a, b, bubble_ids) == graph;
}

bool chi_agreement_tau_colored(const FlagHypermap& hm) {
    auto tau_side = surfaces_by_component(hm);
    auto colored_side = euler_by_component_2d(tau_to_colored(hm));
    if (tau_side.size() != colored_side.size()) return false;
    for (std::size_t i = 0; i < tau_side.size(); ++i)
        if (tau_side[i].first != colored_side[i].first ||
            tau_side[i].second.euler_characteristic != colored_side[i].second)
            return false;
    return true;
}

bool chi_agreement_tau_sigma(const FlagHypermap& hm) {
    auto converted = tau_to_sigma(hm);
    auto sigma_chi = as_map(euler_by_component(converted.hypermap));
    std::set<int> plus(converted.plus_orbit.begin(), converted.plus_orbit.end());
    for (const auto& [min_flag, surface] : surfaces_by_component(hm)) {
        // The component's plus orbit contains its minimum flag by construction.
        if (!plus.count(min_flag)) return false;
        auto it = sigma_chi.find(min_flag);
        if (it == sigma_chi.end() || it->second != surface.euler_characteristic) return false;
    }
    return true;
}

bool sigma_relation(const OrientedHypermap& hm) {
    return (hm.sigma_f() * hm.sigma_e() * hm.sigma_v()).is_identity();
}

bool sigma_double_dual(const OrientedHypermap& hm, CellType t, std::span<const int> ids,
                       const OrientedHypermap& dual) {
    return partial_dual(dual, t, ids) == hm;
}

bool sigma_cells_inverted_in_place(const OrientedHypermap& hm, CellType t,
                                   std::span<const int> ids, const OrientedHypermap& dual) {
    std::set<int> wanted(ids.begin(), ids.end());
    auto before = cells(hm, t);
    auto after = cells(dual, t);
    if (before.size() != after.size()) return false;
    for (std::size_t i = 0; i < before.size(); ++i) {
        const auto& cell = before[i];
        std::vector<int> support = cell.members;
        std::sort(support.begin(), support.end());
        std::vector<int> dual_support = after[i].members;
        std::sort(dual_support.begin(), dual_support.end());
        if (support != dual_support) return false;
        Permutation original = restrict_to(hm.sigma(t), support);
        Permutation restricted = restrict_to(dual.sigma(t), support);
        bool selected = wanted.count(cell.ref.canonical_id) > 0;
        if (restricted != (selected ? original.inverse() : original)) return false;
    }
    return true;
}

bool cross_model_duality_commutes(const OrientedHypermap& hm, CellType t, std::span<const int> ids) {
    FlagHypermap doubled = sigma_to_tau(hm);
    // Half-edge i carries the flag 2i-1; a sigma cell maps to the tau cell
    // of the same type containing that flag.
    std::map<int, int> cell_id_of_flag;
    for (const auto& cell : cells(doubled, t))
        for (int x : cell.members) cell_id_of_flag[x] = cell.ref.canonical_id;
    std::set<int> unique;
    for (int id : ids) unique.insert(cell_id_of_flag.at(2 * id - 1));
    std::vector<int> tau_ids(unique.begin(), unique.end());

    FlagHypermap tau_dual = partial_dual(doubled, t, tau_ids);
    FlagHypermap sigma_dual_doubled = sigma_to_tau(partial_dual(hm, t, ids));
    return are_isomorphic(tau_to_colored(sigma_dual_doubled), tau_to_colored(tau_dual)).has_value();
}

bool chi_agreement_sigma_doubling(const OrientedHypermap& hm) {
    auto sigma_chi = euler_by_component(hm);
    auto tau_chi = as_map([&] {
        std::vector<std::pair<int, int>> flat;
        for (const auto& [min_flag, surface] : surfaces_by_component(sigma_to_tau(hm)))
            flat.emplace_back(min_flag, surface.euler_characteristic);
        return flat;
    }());
    for (const auto& [min_halfedge, chi] : sigma_chi) {
        auto it = tau_chi.find(2 * min_halfedge - 1);
        if (it == tau_chi.end() || it->second != chi) return false;
    }
    return tau_chi.size() == sigma_chi.size();
}

}  // namespace hypermaps::checks
