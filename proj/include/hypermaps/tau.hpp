#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hypermaps/cell.hpp"
#include "hypermaps/perm.hpp"

namespace hypermaps {

/// Hypermap as three fixed-point-free involutions tau0, tau1, tau2 on the
/// flag set {1..n_flags}. Cells are orbits of pairs of the involutions:
/// vertices <tau1,tau2>, hyperedges <tau0,tau2>, faces <tau0,tau1>.
class FlagHypermap {
public:
    FlagHypermap(Permutation tau0, Permutation tau1, Permutation tau2);

    int n_flags() const { return taus_[0].degree(); }
    const Permutation& tau(int i) const { return taus_[static_cast<std::size_t>(i)]; }

    bool operator==(const FlagHypermap&) const = default;

private:
    std::vector<Permutation> taus_;
};

/// The two involutions whose orbits are the cells of the given type,
/// as indices into tau(): vertex {1,2}, hyperedge {0,2}, face {0,1}.
std::pair<int, int> involution_pair(CellType t);

/// Cells of one type, sorted by canonical id. Valency is half the orbit size.
std::vector<Cell> cells(const FlagHypermap& hm, CellType t);

std::vector<std::vector<int>> components(const FlagHypermap& hm);
bool is_connected(const FlagHypermap& hm);

/// True iff tau0*tau2 is an involution, i.e. every hyperedge is a genuine
/// edge with at most two half-edges.
bool is_map(const FlagHypermap& hm);

/// A component is orientable iff its flags split into two orbits under the
/// subgroup of even words in the involutions; the hypermap is orientable iff
/// every component is.
bool is_orientable(const FlagHypermap& hm);

struct SurfaceClass {
    bool orientable = false;
    int euler_characteristic = 0;
    /// Genus when orientable, cross-cap number otherwise.
    int genus = 0;
};

/// chi = #vertices + #hyperedges + #faces - n_flags/2. Connected input only;
/// use surfaces_by_component otherwise.
int euler_characteristic(const FlagHypermap& hm);
SurfaceClass genus_info(const FlagHypermap& hm);

/// Per connected component, keyed by the component's smallest flag.
std::vector<std::pair<int, SurfaceClass>> surfaces_by_component(const FlagHypermap& hm);

/// Partial dual relative to a set of same-type cells: the two involutions
/// defining the type swap their transpositions on the flags of the selected
/// cells; the third involution is untouched.
FlagHypermap partial_dual(const FlagHypermap& hm, CellType t, std::span<const CellRef> cells_in);
FlagHypermap partial_dual(const FlagHypermap& hm, CellType t, std::span<const int> cell_ids);

/// Partial dual relative to every cell of the type; fully exchanges the two
/// defining involutions.
FlagHypermap total_dual(const FlagHypermap& hm, CellType t);

}  // namespace hypermaps
