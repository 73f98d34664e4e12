#include "hypermaps/colored.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hypermaps/errors.hpp"

namespace hypermaps {

ColoredGraph::ColoredGraph(std::vector<Permutation> matchings) : matchings_(std::move(matchings)) {
    if (matchings_.size() < 2) throw ValidationError("a colored graph needs at least two colors");
    const int n = matchings_[0].degree();
    for (std::size_t c = 0; c < matchings_.size(); ++c) {
        if (matchings_[c].degree() != n)
            throw DomainMismatch("matchings must act on the same vertex set");
        if (!matchings_[c].is_involution() || !matchings_[c].is_fixed_point_free())
            throw ValidationError("color " + std::to_string(c) + " is not a perfect matching");
    }
}

const Permutation& ColoredGraph::matching(int color) const {
    if (color < 0 || color >= num_colors())
        throw BadColor("color " + std::to_string(color) + " outside {0.." +
                       std::to_string(dimension()) + "}");
    return matchings_[static_cast<std::size_t>(color)];
}

namespace {

std::vector<int> checked_colors(const ColoredGraph& g, std::span<const int> colors) {
    std::set<int> unique;
    for (int c : colors) {
        if (c < 0 || c >= g.num_colors())
            throw BadColor("color " + std::to_string(c) + " outside {0.." +
                           std::to_string(g.dimension()) + "}");
        unique.insert(c);
    }
    return {unique.begin(), unique.end()};
}

}  // namespace

std::vector<Bubble> bubbles(const ColoredGraph& g, std::span<const int> colors) {
    auto color_list = checked_colors(g, colors);
    std::vector<Permutation> gens;
    for (int c : color_list) gens.push_back(g.matching(c));
    std::vector<Bubble> out;
    for (auto& block : orbits(gens, g.n_vertices())) {
        Bubble bubble;
        bubble.colors = color_list;
        bubble.canonical_id = block.front();
        bubble.vertices = std::move(block);
        out.push_back(std::move(bubble));
    }
    return out;
}

namespace {

void k_subsets(int num_colors, int k, std::vector<int>& current, int next,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(current.size()) == k) {
        emit(current);
        return;
    }
    for (int c = next; c <= num_colors - (k - static_cast<int>(current.size())); ++c) {
        current.push_back(c);
        k_subsets(num_colors, k, current, c + 1, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<Bubble> all_bubbles(const ColoredGraph& g, int k) {
    if (k < 0 || k > g.num_colors())
        throw BadColorSet("bubble order " + std::to_string(k) + " outside 0.." +
                          std::to_string(g.num_colors()));
    std::vector<Bubble> out;
    std::vector<int> current;
    k_subsets(g.num_colors(), k, current, 0, [&](const std::vector<int>& subset) {
        auto part = bubbles(g, subset);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    });
    return out;
}

std::vector<std::vector<int>> components(const ColoredGraph& g) {
    return orbits(g.matchings(), g.n_vertices());
}

bool is_connected(const ColoredGraph& g) { return components(g).size() == 1; }

bool is_bipartite(const ColoredGraph& g) {
    const int n = g.n_vertices();
    std::vector<int> side(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> queue;
    for (int start = 1; start <= n; ++start) {
        if (side[static_cast<std::size_t>(start)] != 0) continue;
        side[static_cast<std::size_t>(start)] = 1;
        queue.assign(1, start);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int c = 0; c < g.num_colors(); ++c) {
                int w = g.matching(c)(u);
                if (side[static_cast<std::size_t>(w)] == 0) {
                    side[static_cast<std::size_t>(w)] = -side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

std::vector<bool> selected_vertex_mask(const ColoredGraph& g, const std::vector<Bubble>& pool,
                                       std::span<const int> bubble_ids) {
    std::vector<bool> mask(static_cast<std::size_t>(g.n_vertices()) + 1, false);
    std::set<int> wanted(bubble_ids.begin(), bubble_ids.end());
    for (const Bubble& bubble : pool) {
        if (!wanted.erase(bubble.canonical_id)) continue;
        for (int v : bubble.vertices) mask[static_cast<std::size_t>(v)] = true;
    }
    if (!wanted.empty())
        throw BubbleNotFound("no bubble with id " + std::to_string(*wanted.begin()) +
                             " for the given colors");
    return mask;
}

}  // namespace

ColoredGraph swap_colors_in_bubbles(const ColoredGraph& g, int c1, int c2,
                                    std::span<const int> bubble_ids) {
    const std::vector<int> colors{c1, c2};
    auto pool = bubbles(g, colors);
    auto mask = selected_vertex_mask(g, pool, bubble_ids);
    if (c1 == c2) return g;

    std::vector<Permutation> matchings = g.matchings();
    std::vector<int> im1(static_cast<std::size_t>(g.n_vertices()));
    std::vector<int> im2(static_cast<std::size_t>(g.n_vertices()));
    for (int v = 1; v <= g.n_vertices(); ++v) {
        bool swap = mask[static_cast<std::size_t>(v)];
        im1[static_cast<std::size_t>(v) - 1] = swap ? g.matching(c2)(v) : g.matching(c1)(v);
        im2[static_cast<std::size_t>(v) - 1] = swap ? g.matching(c1)(v) : g.matching(c2)(v);
    }
    matchings[static_cast<std::size_t>(c1)] = Permutation::from_images(std::move(im1));
    matchings[static_cast<std::size_t>(c2)] = Permutation::from_images(std::move(im2));
    return ColoredGraph(std::move(matchings));
}

ColoredGraph recolor_bubbles(const ColoredGraph& g, std::span<const int> color_set,
                             std::span<const int> bubble_ids, const std::map<int, int>& pi) {
    auto colors = checked_colors(g, color_set);
    if (static_cast<int>(colors.size()) != g.dimension())
        throw BadColorSet("the color set must leave out exactly one of the " +
                          std::to_string(g.num_colors()) + " colors");
    std::set<int> color_members(colors.begin(), colors.end());
    std::set<int> pi_images;
    for (int c : colors) {
        auto it = pi.find(c);
        if (it == pi.end() || !color_members.count(it->second))
            throw BadColorSet("color permutation must map the color set onto itself");
        pi_images.insert(it->second);
    }
    if (pi_images.size() != colors.size())
        throw BadColorSet("color permutation must map the color set onto itself");

    auto pool = bubbles(g, colors);
    auto mask = selected_vertex_mask(g, pool, bubble_ids);

    std::vector<std::vector<int>> images;
    for (int c = 0; c < g.num_colors(); ++c) {
        images.emplace_back(static_cast<std::size_t>(g.n_vertices()));
        for (int v = 1; v <= g.n_vertices(); ++v)
            images.back()[static_cast<std::size_t>(v) - 1] = g.matching(c)(v);
    }
    for (int c : colors) {
        int target = pi.at(c);
        for (int v = 1; v <= g.n_vertices(); ++v)
            if (mask[static_cast<std::size_t>(v)])
                images[static_cast<std::size_t>(target)][static_cast<std::size_t>(v) - 1] =
                    g.matching(c)(v);
    }
    std::vector<Permutation> matchings;
    for (auto& im : images) matchings.push_back(Permutation::from_images(std::move(im)));
    ColoredGraph result(std::move(matchings));

    // Recoloring acts inside components of the color set, so those components
    // cannot merge or split.
    auto before = bubbles(g, colors);
    auto after = bubbles(result, colors);
    if (before.size() != after.size())
        throw Error("recoloring changed the bubble structure of its own colors");
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i].vertices != after[i].vertices)
            throw Error("recoloring changed the bubble structure of its own colors");
    return result;
}

std::vector<std::pair<int, int>> euler_by_component_2d(const ColoredGraph& g) {
    if (g.dimension() != 2)
        throw BadDimension("Euler characteristic needs a [2]-colored graph, got dimension " +
                           std::to_string(g.dimension()));
    auto comps = components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(g.n_vertices()) + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<int> bubble_count(comps.size(), 0);
    for (const Bubble& bubble : all_bubbles(g, 2))
        ++bubble_count[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(bubble.canonical_id)])];

    std::vector<std::pair<int, int>> out;
    for (std::size_t c = 0; c < comps.size(); ++c)
        out.emplace_back(comps[c].front(), bubble_count[c] - static_cast<int>(comps[c].size()) / 2);
    return out;
}

int euler_characteristic_2d(const ColoredGraph& g) {
    auto per_component = euler_by_component_2d(g);
    if (per_component.size() != 1)
        throw NotConnected("graph has " + std::to_string(per_component.size()) +
                           " components; use euler_by_component_2d");
    return per_component.front().second;
}

std::vector<std::pair<int, int>> edge_multiset(const ColoredGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < g.num_colors(); ++c)
        for (int v = 1; v <= g.n_vertices(); ++v)
            if (v < g.matching(c)(v)) edges.emplace_back(v, g.matching(c)(v));
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace hypermaps
