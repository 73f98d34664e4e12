#include "hypermaps/tau.hpp"

#include <array>
#include <set>

#include "hypermaps/errors.hpp"

namespace hypermaps {

std::string_view to_string(CellType t) {
    switch (t) {
        case CellType::vertex: return "vertex";
        case CellType::hyperedge: return "hyperedge";
        case CellType::face: return "face";
    }
    return "?";
}

CellType cell_type_from_string(std::string_view name) {
    if (name == "vertex") return CellType::vertex;
    if (name == "edge" || name == "hyperedge") return CellType::hyperedge;
    if (name == "face") return CellType::face;
    throw ParseError("unknown cell type \"" + std::string(name) + "\"");
}

FlagHypermap::FlagHypermap(Permutation tau0, Permutation tau1, Permutation tau2) {
    taus_.reserve(3);
    taus_.push_back(std::move(tau0));
    taus_.push_back(std::move(tau1));
    taus_.push_back(std::move(tau2));
    const int n = taus_[0].degree();
    if (taus_[1].degree() != n || taus_[2].degree() != n)
        throw DomainMismatch("the three involutions must act on the same flag set");
    if (n % 2 != 0) throw ValidationError("flag count must be even");
    for (int i = 0; i < 3; ++i) {
        if (!taus_[static_cast<std::size_t>(i)].is_involution())
            throw ValidationError("tau" + std::to_string(i) + " is not an involution");
        if (!taus_[static_cast<std::size_t>(i)].is_fixed_point_free())
            throw ValidationError("tau" + std::to_string(i) + " has a fixed point");
    }
}

std::pair<int, int> involution_pair(CellType t) {
    switch (t) {
        case CellType::vertex: return {1, 2};
        case CellType::hyperedge: return {0, 2};
        case CellType::face: return {0, 1};
    }
    return {0, 0};
}

std::vector<Cell> cells(const FlagHypermap& hm, CellType t) {
    auto [a, b] = involution_pair(t);
    const std::array<Permutation, 2> gens{hm.tau(a), hm.tau(b)};
    std::vector<Cell> out;
    for (auto& block : orbits(gens, hm.n_flags())) {
        Cell cell;
        cell.ref = CellRef{t, block.front()};
        cell.valency = static_cast<int>(block.size()) / 2;
        cell.members = std::move(block);
        out.push_back(std::move(cell));
    }
    return out;
}

std::vector<std::vector<int>> components(const FlagHypermap& hm) {
    const std::array<Permutation, 3> gens{hm.tau(0), hm.tau(1), hm.tau(2)};
    return orbits(gens, hm.n_flags());
}

bool is_connected(const FlagHypermap& hm) { return components(hm).size() == 1; }

bool is_map(const FlagHypermap& hm) { return (hm.tau(0) * hm.tau(2)).is_involution(); }

namespace {

/// Orbits of the even-word subgroup, generated by tau2*tau1 and tau0*tau2
/// (tau1*tau0 is their product's inverse).
std::vector<std::vector<int>> even_orbits(const FlagHypermap& hm) {
    const std::array<Permutation, 2> gens{hm.tau(2) * hm.tau(1), hm.tau(0) * hm.tau(2)};
    return orbits(gens, hm.n_flags());
}

std::vector<int> block_index(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) index[static_cast<std::size_t>(x)] = static_cast<int>(b);
    return index;
}

}  // namespace

bool is_orientable(const FlagHypermap& hm) {
    auto comps = components(hm);
    auto evens = even_orbits(hm);
    auto even_of = block_index(evens, hm.n_flags());
    for (const auto& comp : comps) {
        std::set<int> seen;
        for (int x : comp) seen.insert(even_of[static_cast<std::size_t>(x)]);
        if (seen.size() != 2) return false;
    }
    return true;
}

std::vector<std::pair<int, SurfaceClass>> surfaces_by_component(const FlagHypermap& hm) {
    auto comps = components(hm);
    auto comp_of = block_index(comps, hm.n_flags());
    auto evens = even_orbits(hm);
    auto even_of = block_index(evens, hm.n_flags());

    std::vector<int> cell_count(comps.size(), 0);
    for (CellType t : {CellType::vertex, CellType::hyperedge, CellType::face})
        for (const auto& cell : cells(hm, t))
            ++cell_count[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(cell.ref.canonical_id)])];

    std::vector<std::pair<int, SurfaceClass>> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::set<int> seen;
        for (int x : comps[c]) seen.insert(even_of[static_cast<std::size_t>(x)]);
        SurfaceClass surface;
        surface.orientable = seen.size() == 2;
        surface.euler_characteristic = cell_count[c] - static_cast<int>(comps[c].size()) / 2;
        surface.genus = surface.orientable ? (2 - surface.euler_characteristic) / 2
                                           : 2 - surface.euler_characteristic;
        out.emplace_back(comps[c].front(), surface);
    }
    return out;
}

int euler_characteristic(const FlagHypermap& hm) { return genus_info(hm).euler_characteristic; }

SurfaceClass genus_info(const FlagHypermap& hm) {
    auto per_component = surfaces_by_component(hm);
    if (per_component.size() != 1)
        throw NotConnected("hypermap has " + std::to_string(per_component.size()) +
                           " components; use surfaces_by_component");
    return per_component.front().second;
}

FlagHypermap partial_dual(const FlagHypermap& hm, CellType t, std::span<const CellRef> cells_in) {
    std::vector<int> ids;
    ids.reserve(cells_in.size());
    for (const CellRef& ref : cells_in) {
        if (ref.type != t)
            throw CellTypeMismatch("cell " + std::to_string(ref.canonical_id) + " has type " +
                                   std::string(to_string(ref.type)) + ", expected " +
                                   std::string(to_string(t)));
        ids.push_back(ref.canonical_id);
    }
    return partial_dual(hm, t, std::span<const int>(ids));
}

FlagHypermap partial_dual(const FlagHypermap& hm, CellType t, std::span<const int> cell_ids) {
    auto all = cells(hm, t);
    std::vector<bool> in_selection(static_cast<std::size_t>(hm.n_flags()) + 1, false);
    std::set<int> wanted(cell_ids.begin(), cell_ids.end());
    for (const auto& cell : all) {
        if (!wanted.erase(cell.ref.canonical_id)) continue;
        for (int x : cell.members) in_selection[static_cast<std::size_t>(x)] = true;
    }
    if (!wanted.empty())
        throw CellNotFound("no " + std::string(to_string(t)) + " cell with id " +
                           std::to_string(*wanted.begin()));

    auto [a, b] = involution_pair(t);
    const Permutation& A = hm.tau(a);
    const Permutation& B = hm.tau(b);
    std::vector<int> new_a(static_cast<std::size_t>(hm.n_flags()));
    std::vector<int> new_b(static_cast<std::size_t>(hm.n_flags()));
    for (int x = 1; x <= hm.n_flags(); ++x) {
        bool swap = in_selection[static_cast<std::size_t>(x)];
        new_a[static_cast<std::size_t>(x) - 1] = swap ? B(x) : A(x);
        new_b[static_cast<std::size_t>(x) - 1] = swap ? A(x) : B(x);
    }

    std::vector<Permutation> taus{hm.tau(0), hm.tau(1), hm.tau(2)};
    taus[static_cast<std::size_t>(a)] = Permutation::from_images(std::move(new_a));
    taus[static_cast<std::size_t>(b)] = Permutation::from_images(std::move(new_b));
    return FlagHypermap(std::move(taus[0]), std::move(taus[1]), std::move(taus[2]));
}

FlagHypermap total_dual(const FlagHypermap& hm, CellType t) {
    std::vector<int> ids;
    for (const auto& cell : cells(hm, t)) ids.push_back(cell.ref.canonical_id);
    return partial_dual(hm, t, ids);
}

}  // namespace hypermaps
