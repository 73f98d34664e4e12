#pragma once

#include <vector>

#include "hypermaps/colored.hpp"
#include "hypermaps/sigma.hpp"
#include "hypermaps/tau.hpp"

namespace hypermaps {

/// Doubles each half-edge i into the flag pair (2i-1, 2i):
///   tau2 swaps 2i-1 and 2i,
///   tau0 sends 2i to 2*sigma_e(i)-1  and 2i-1 to 2*sigma_e^-1(i),
///   tau1 sends 2i to 2*sigma_v^-1(i)-1 and 2i-1 to 2*sigma_v(i).
/// The result is always orientable; odd flags form one orientation class.
FlagHypermap sigma_to_tau(const OrientedHypermap& hm);

struct TauToSigmaResult {
    OrientedHypermap hypermap;   // degree n_flags, supported on plus_orbit
    std::vector<int> plus_orbit; // ascending
};

/// Splits each component's flags into the two orbits of the even-word
/// subgroup and restricts tau2*tau1, tau0*tau2, tau1*tau0 to the orbit
/// containing the component's smallest flag. Labels are kept, so the
/// permutations fix everything outside the plus orbit.
/// Throws NotOrientable if any component has a single even orbit.
TauToSigmaResult tau_to_sigma(const FlagHypermap& hm);

/// The involution model read as a [2]-colored graph and back; both
/// directions are plain reinterpretations.
ColoredGraph tau_to_colored(const FlagHypermap& hm);
FlagHypermap colored_to_tau(const ColoredGraph& g);

}  // namespace hypermaps
