#include "hypermaps/sigma.hpp"

#include <array>
#include <map>
#include <set>

#include "hypermaps/errors.hpp"

namespace hypermaps {

OrientedHypermap::OrientedHypermap(Permutation sigma_v, Permutation sigma_e, Permutation sigma_f) {
    sigmas_.reserve(3);
    sigmas_.push_back(std::move(sigma_v));
    sigmas_.push_back(std::move(sigma_e));
    sigmas_.push_back(std::move(sigma_f));
    const int n = sigmas_[0].degree();
    if (sigmas_[1].degree() != n || sigmas_[2].degree() != n)
        throw DomainMismatch("the three permutations must act on the same half-edge set");
    if (!(sigmas_[2] * sigmas_[1] * sigmas_[0]).is_identity())
        throw ValidationError("sigma_f * sigma_e * sigma_v is not the identity");
}

OrientedHypermap OrientedHypermap::make(const Permutation& sigma_v, const Permutation& sigma_e) {
    if (sigma_v.degree() != sigma_e.degree())
        throw DomainMismatch("sigma_v and sigma_e must act on the same half-edge set");
    return OrientedHypermap(sigma_v, sigma_e, (sigma_e * sigma_v).inverse());
}

const Permutation& OrientedHypermap::sigma(CellType t) const {
    switch (t) {
        case CellType::vertex: return sigmas_[0];
        case CellType::hyperedge: return sigmas_[1];
        case CellType::face: return sigmas_[2];
    }
    return sigmas_[0];
}

std::vector<Cell> cells(const OrientedHypermap& hm, CellType t) {
    std::vector<Cell> out;
    for (auto& cycle : cycle_decomposition(hm.sigma(t)).cycles) {
        Cell cell;
        cell.ref = CellRef{t, cycle.front()};
        cell.valency = static_cast<int>(cycle.size());
        cell.members = std::move(cycle);
        out.push_back(std::move(cell));
    }
    return out;
}

std::vector<std::vector<int>> components(const OrientedHypermap& hm) {
    const std::array<Permutation, 2> gens{hm.sigma_v(), hm.sigma_e()};
    return orbits(gens, hm.n_halfedges());
}

bool is_connected(const OrientedHypermap& hm) { return components(hm).size() == 1; }

bool is_map(const OrientedHypermap& hm) { return hm.sigma_e().is_involution(); }

std::vector<std::pair<int, int>> euler_by_component(const OrientedHypermap& hm) {
    auto comps = components(hm);
    std::vector<int> comp_of(static_cast<std::size_t>(hm.n_halfedges()) + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int x : comps[c]) comp_of[static_cast<std::size_t>(x)] = static_cast<int>(c);

    std::vector<int> cycle_count(comps.size(), 0);
    for (CellType t : {CellType::vertex, CellType::hyperedge, CellType::face})
        for (const auto& cycle : cycle_decomposition(hm.sigma(t)).cycles)
            ++cycle_count[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(cycle.front())])];

    std::vector<std::pair<int, int>> out;
    for (std::size_t c = 0; c < comps.size(); ++c)
        out.emplace_back(comps[c].front(), cycle_count[c] - static_cast<int>(comps[c].size()));
    return out;
}

int euler_characteristic(const OrientedHypermap& hm) {
    auto per_component = euler_by_component(hm);
    if (per_component.size() != 1)
        throw NotConnected("hypermap has " + std::to_string(per_component.size()) +
                           " components; use euler_by_component");
    return per_component.front().second;
}

int genus(const OrientedHypermap& hm) { return (2 - euler_characteristic(hm)) / 2; }

OrientedHypermap partial_dual(const OrientedHypermap& hm, CellType t, std::span<const CellRef> cells_in) {
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

OrientedHypermap partial_dual(const OrientedHypermap& hm, CellType t, std::span<const int> cell_ids) {
    auto dec = cycle_decomposition(hm.sigma(t));
    std::map<int, const std::vector<int>*> by_min;
    for (const auto& cycle : dec.cycles) by_min[cycle.front()] = &cycle;

    std::vector<std::vector<int>> selected;
    std::set<int> wanted(cell_ids.begin(), cell_ids.end());
    for (int id : wanted) {
        auto it = by_min.find(id);
        if (it == by_min.end())
            throw CellNotFound("no " + std::string(to_string(t)) + " cell with id " + std::to_string(id));
        selected.push_back(*it->second);
    }

    const int n = hm.n_halfedges();
    Permutation sel = Permutation::from_cycles(n, selected);
    Permutation rest = hm.sigma(t) * sel.inverse();

    switch (t) {
        case CellType::vertex:
            return OrientedHypermap(rest * sel.inverse(), hm.sigma_e() * sel, sel * hm.sigma_f());
        case CellType::hyperedge:
            return OrientedHypermap(sel * hm.sigma_v(), rest * sel.inverse(), hm.sigma_f() * sel);
        case CellType::face:
            return OrientedHypermap(hm.sigma_v() * sel, sel * hm.sigma_e(), rest * sel.inverse());
    }
    throw Error("unreachable cell type");
}

OrientedHypermap total_dual(const OrientedHypermap& hm, CellType t) {
    std::vector<int> ids;
    for (const auto& cell : cells(hm, t)) ids.push_back(cell.ref.canonical_id);
    return partial_dual(hm, t, ids);
}

OrientedHypermap reverse_orientation(const OrientedHypermap& hm) {
    return OrientedHypermap(hm.sigma_v().inverse(), hm.sigma_e().inverse(),
                            hm.sigma_v() * hm.sigma_e());
}

}  // namespace hypermaps
