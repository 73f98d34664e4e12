#pragma once

#include <optional>
#include <vector>

#include "hypermaps/colored.hpp"

namespace hypermaps {

/// Color-preserving isomorphism: a vertex bijection phi with
/// phi(m_c(v)) = m'_c(phi(v)) for every color c. Returns phi as a vector
/// with phi[v-1] the image of v, or nullopt. On a connected graph one image
/// determines the rest, so the search tries each base image and propagates
/// along colors; disconnected graphs are matched component by component.
/// Throws BadDimension when the color counts differ.
std::optional<std::vector<int>> are_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);

/// Deterministic relabeling such that isomorphic graphs serialize
/// identically: per component, the discovery labeling minimizing the
/// flattened matching table over all base vertices; components ordered by
/// that table.
ColoredGraph canonical_form(const ColoredGraph& g);

}  // namespace hypermaps
