#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hypermaps/cell.hpp"
#include "hypermaps/perm.hpp"

namespace hypermaps {

/// Oriented hypermap as permutations (sigma_v, sigma_e, sigma_f) of the
/// half-edge set {1..n} with sigma_f * sigma_e * sigma_v = id. Cycles of
/// sigma_v are the vertices, of sigma_e the hyperedges, of sigma_f the
/// faces; a fixed point is a valency-1 cell. Labels fixed by all three
/// permutations are isolated half-edges, each a sphere component of its own.
class OrientedHypermap {
public:
    OrientedHypermap(Permutation sigma_v, Permutation sigma_e, Permutation sigma_f);

    /// Derives sigma_f as (sigma_e * sigma_v)^-1.
    static OrientedHypermap make(const Permutation& sigma_v, const Permutation& sigma_e);

    int n_halfedges() const { return sigmas_[0].degree(); }
    const Permutation& sigma_v() const { return sigmas_[0]; }
    const Permutation& sigma_e() const { return sigmas_[1]; }
    const Permutation& sigma_f() const { return sigmas_[2]; }
    const Permutation& sigma(CellType t) const;

    bool operator==(const OrientedHypermap&) const = default;

private:
    std::vector<Permutation> sigmas_;
};

std::vector<Cell> cells(const OrientedHypermap& hm, CellType t);

std::vector<std::vector<int>> components(const OrientedHypermap& hm);
bool is_connected(const OrientedHypermap& hm);

/// True iff sigma_e is an involution (every hyperedge has at most two
/// half-edges).
bool is_map(const OrientedHypermap& hm);

/// chi = c_V + c_E + c_F - n, counting fixed points as cycles. Connected
/// input only; use euler_by_component otherwise.
int euler_characteristic(const OrientedHypermap& hm);
int genus(const OrientedHypermap& hm);

/// Per connected component, keyed by the component's smallest half-edge.
std::vector<std::pair<int, int>> euler_by_component(const OrientedHypermap& hm);

/// Partial dual relative to same-type cells: with sel the product of the
/// selected cycles of the type's permutation and rest its complement,
///   vertex:    (rest * sel^-1,  sigma_e * sel,  sel * sigma_f)
///   hyperedge: (sel * sigma_v,  rest * sel^-1,  sigma_f * sel)
///   face:      (sigma_v * sel,  sel * sigma_e,  rest * sel^-1)
OrientedHypermap partial_dual(const OrientedHypermap& hm, CellType t, std::span<const CellRef> cells_in);
OrientedHypermap partial_dual(const OrientedHypermap& hm, CellType t, std::span<const int> cell_ids);

/// Dual relative to every cell of the type. Closed forms:
///   vertex (sigma_v^-1, sigma_f^-1, sigma_e^-1),
///   hyperedge (sigma_f^-1, sigma_e^-1, sigma_v^-1),
///   face (sigma_e^-1, sigma_v^-1, sigma_f^-1).
OrientedHypermap total_dual(const OrientedHypermap& hm, CellType t);

/// Same hypermap with the opposite orientation:
/// (sigma_v^-1, sigma_e^-1, sigma_v * sigma_e).
OrientedHypermap reverse_orientation(const OrientedHypermap& hm);

}  // namespace hypermaps
