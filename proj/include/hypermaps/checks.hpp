#pragma once

#include <span>

#include "hypermaps/colored.hpp"
#include "hypermaps/sigma.hpp"
#include "hypermaps/tau.hpp"

namespace hypermaps::checks {

/// Property checkers shared by the randomized suite and by tests that feed
/// them deliberately corrupted duals. Each takes the original value, the
/// dualized cell selection, and a candidate dual, and returns whether the
/// candidate behaves like the true partial dual.

/// Dualizing the candidate again restores the original exactly.
bool tau_double_dual(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                     const FlagHypermap& dual);

/// The candidate equals the transposition-product form: multiply each swapped
/// involution by its own transpositions on the selected flags, then by the
/// partner's. Independent of the pointwise implementation of partial_dual.
bool tau_dual_product_form(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                           const FlagHypermap& dual);

/// Cells of the dualized type keep their flag supports (hence valencies).
bool tau_cell_supports_preserved(const FlagHypermap& hm, CellType t, const FlagHypermap& dual);

bool orientability_preserved(const FlagHypermap& hm, const FlagHypermap& dual);

/// Swapping the two matching colors of the type inside the selected bubbles
/// reproduces the candidate dual, and leaves the uncolored graph alone.
bool colored_swap_matches_tau_dual(const FlagHypermap& hm, CellType t, std::span<const int> ids,
                                   const FlagHypermap& dual);

/// Per-component Euler characteristics agree between the involution model
/// and the 2-bubble count of its colored graph.
bool chi_agreement_tau_colored(const FlagHypermap& hm);

/// Per-component Euler characteristics agree between an orientable
/// involution-model hypermap and its oriented model.
bool chi_agreement_tau_sigma(const FlagHypermap& hm);

/// sigma_f * sigma_e * sigma_v = id on the candidate.
bool sigma_relation(const OrientedHypermap& hm);

bool sigma_double_dual(const OrientedHypermap& hm, CellType t, std::span<const int> ids,
                       const OrientedHypermap& dual);

/// Cells of the dualized type keep their supports; selected cycles are
/// inverted in place, unselected ones are untouched.
bool sigma_cells_inverted_in_place(const OrientedHypermap& hm, CellType t,
                                   std::span<const int> ids, const OrientedHypermap& dual);

/// Doubling the sigma dual gives a hypermap isomorphic (as a colored graph)
/// to the involution-model dual of the doubling, with cells matched through
/// half-edge i <-> flag 2i-1.
bool cross_model_duality_commutes(const OrientedHypermap& hm, CellType t, std::span<const int> ids);

/// Per-component chi of the oriented model matches its doubling.
bool chi_agreement_sigma_doubling(const OrientedHypermap& hm);

}  // namespace hypermaps::checks
