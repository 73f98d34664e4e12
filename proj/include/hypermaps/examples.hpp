#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypermaps/sigma.hpp"
#include "hypermaps/tau.hpp"

namespace hypermaps::examples {

/// Non-orientable map on the projective plane: two vertices, three edges,
/// two faces, chi = 1.
FlagHypermap projective_map();

/// Non-orientable hypermap on the projective plane: one vertex, one
/// hyperedge, two faces, chi = 1.
FlagHypermap projective_hypermap();

/// Orientable map on the sphere: two vertices, three edges, three faces,
/// chi = 2.
FlagHypermap sphere_map();

/// Orientable hypermap on the sphere: one vertex, one hyperedge, three
/// faces, chi = 2.
FlagHypermap sphere_hypermap();

/// sphere_map in the oriented model, on its flag labels {1,3,5,7,8,12}
/// inside degree 12; the six other labels are isolated half-edges.
OrientedHypermap sphere_map_sigma();

/// sphere_hypermap in the oriented model with compact labels {1,2,3}.
OrientedHypermap sphere_hypermap_sigma();

std::vector<std::pair<std::string, FlagHypermap>> all_flag_examples();
std::vector<std::pair<std::string, OrientedHypermap>> all_oriented_examples();

}  // namespace hypermaps::examples
