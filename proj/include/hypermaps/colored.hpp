#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hypermaps/perm.hpp"

namespace hypermaps {

/// Properly edge-colored graph: one fixed-point-free involution (perfect
/// matching) per color in {0..D} on the vertex set {1..n}, so every vertex
/// meets every color exactly once. Loops are impossible; parallel edges of
/// different colors are fine. D = 2 is exactly the involution model of a
/// hypermap, with color i carrying tau_i.
class ColoredGraph {
public:
    explicit ColoredGraph(std::vector<Permutation> matchings);

    int n_vertices() const { return matchings_[0].degree(); }
    int num_colors() const { return static_cast<int>(matchings_.size()); }
    int dimension() const { return num_colors() - 1; }
    const Permutation& matching(int color) const;
    const std::vector<Permutation>& matchings() const { return matchings_; }

    bool operator==(const ColoredGraph&) const = default;

private:
    std::vector<Permutation> matchings_;
};

/// Connected component of the subgraph induced by a set of colors.
struct Bubble {
    std::vector<int> colors;    // ascending
    std::vector<int> vertices;  // ascending
    int canonical_id = 0;       // minimum vertex
};

/// Bubbles of the given colors, sorted by canonical id. An empty color set
/// yields one singleton bubble per vertex.
std::vector<Bubble> bubbles(const ColoredGraph& g, std::span<const int> colors);

/// All bubbles over every k-subset of colors, subsets in lexicographic order.
std::vector<Bubble> all_bubbles(const ColoredGraph& g, int k);

std::vector<std::vector<int>> components(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

/// 2-colorability of the union of all matchings. For D = 2 this is exactly
/// orientability of the encoded hypermap.
bool is_bipartite(const ColoredGraph& g);

/// Within the named {c1,c2}-bubbles, the two matchings trade their edges;
/// everything else, including the underlying uncolored graph, is unchanged.
ColoredGraph swap_colors_in_bubbles(const ColoredGraph& g, int c1, int c2,
                                    std::span<const int> bubble_ids);

/// Within the named bubbles of a D-element color set, edge colors are pushed
/// forward through pi (a bijection of the color set): the new matching of
/// color pi(c) takes the old edges of color c. pi as a transposition on a
/// [2]-colored graph is swap_colors_in_bubbles.
ColoredGraph recolor_bubbles(const ColoredGraph& g, std::span<const int> color_set,
                             std::span<const int> bubble_ids, const std::map<int, int>& pi);

/// chi = (number of 2-bubbles) - n/2 for a connected [2]-colored graph.
int euler_characteristic_2d(const ColoredGraph& g);

/// Per connected component, keyed by the component's smallest vertex.
std::vector<std::pair<int, int>> euler_by_component_2d(const ColoredGraph& g);

/// The underlying uncolored edge multiset as sorted (u, v) pairs with u < v.
std::vector<std::pair<int, int>> edge_multiset(const ColoredGraph& g);

}  // namespace hypermaps
