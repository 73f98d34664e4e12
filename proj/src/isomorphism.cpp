#include "hypermaps/isomorphism.hpp"

#include <algorithm>

#include "hypermaps/errors.hpp"

namespace hypermaps {

namespace {

struct CanonicalComponent {
    // signature[i * num_colors + c] is the discovery label of the color-c
    // neighbor of the vertex with discovery label i+1.
    std::vector<int> signature;
    // order[i] is the original vertex carrying discovery label i+1.
    std::vector<int> order;
};

/// Breadth-first discovery labeling from a base vertex, exploring colors in
/// ascending order. Deterministic given (graph, base).
CanonicalComponent labeling_from(const ColoredGraph& g, int base, std::size_t comp_size) {
    CanonicalComponent out;
    std::vector<int> label(static_cast<std::size_t>(g.n_vertices()) + 1, 0);
    out.order.reserve(comp_size);
    out.order.push_back(base);
    label[static_cast<std::size_t>(base)] = 1;
    out.signature.reserve(comp_size * static_cast<std::size_t>(g.num_colors()));
    for (std::size_t i = 0; i < out.order.size(); ++i) {
        for (int c = 0; c < g.num_colors(); ++c) {
            int w = g.matching(c)(out.order[i]);
            if (label[static_cast<std::size_t>(w)] == 0) {
                out.order.push_back(w);
                label[static_cast<std::size_t>(w)] = static_cast<int>(out.order.size());
            }
            out.signature.push_back(label[static_cast<std::size_t>(w)]);
        }
    }
    return out;
}

CanonicalComponent canonicalize_component(const ColoredGraph& g, const std::vector<int>& comp) {
    CanonicalComponent best;
    for (int base : comp) {
        auto candidate = labeling_from(g, base, comp.size());
        if (best.order.empty() || candidate.signature < best.signature) best = std::move(candidate);
    }
    return best;
}

std::vector<CanonicalComponent> canonical_components(const ColoredGraph& g) {
    std::vector<CanonicalComponent> canon;
    for (const auto& comp : components(g)) canon.push_back(canonicalize_component(g, comp));
    std::stable_sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
        if (a.signature != b.signature) return a.signature < b.signature;
        return a.order.front() < b.order.front();
    });
    return canon;
}

bool commutes_with_matchings(const ColoredGraph& g1, const ColoredGraph& g2,
                             const std::vector<int>& phi) {
    for (int c = 0; c < g1.num_colors(); ++c)
        for (int v = 1; v <= g1.n_vertices(); ++v)
            if (phi[static_cast<std::size_t>(g1.matching(c)(v)) - 1] !=
                g2.matching(c)(phi[static_cast<std::size_t>(v) - 1]))
                return false;
    return true;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
    if (g1.num_colors() != g2.num_colors())
        throw BadDimension("cannot compare graphs with " + std::to_string(g1.num_colors()) +
                           " and " + std::to_string(g2.num_colors()) + " colors");
    if (g1.n_vertices() != g2.n_vertices()) return std::nullopt;

    auto canon1 = canonical_components(g1);
    auto canon2 = canonical_components(g2);
    if (canon1.size() != canon2.size()) return std::nullopt;

    std::vector<int> phi(static_cast<std::size_t>(g1.n_vertices()));
    for (std::size_t i = 0; i < canon1.size(); ++i) {
        if (canon1[i].signature != canon2[i].signature) return std::nullopt;
        for (std::size_t j = 0; j < canon1[i].order.size(); ++j)
            phi[static_cast<std::size_t>(canon1[i].order[j]) - 1] = canon2[i].order[j];
    }
    if (!commutes_with_matchings(g1, g2, phi)) return std::nullopt;
    return phi;
}

ColoredGraph canonical_form(const ColoredGraph& g) {
    auto canon = canonical_components(g);
    std::vector<int> new_label(static_cast<std::size_t>(g.n_vertices()) + 1, 0);
    int next = 1;
    for (const auto& comp : canon)
        for (int v : comp.order) new_label[static_cast<std::size_t>(v)] = next++;

    std::vector<Permutation> matchings;
    for (int c = 0; c < g.num_colors(); ++c) {
        std::vector<int> images(static_cast<std::size_t>(g.n_vertices()));
        for (int v = 1; v <= g.n_vertices(); ++v)
            images[static_cast<std::size_t>(new_label[static_cast<std::size_t>(v)]) - 1] =
                new_label[static_cast<std::size_t>(g.matching(c)(v))];
        matchings.push_back(Permutation::from_images(std::move(images)));
    }
    return ColoredGraph(std::move(matchings));
}

}  // namespace hypermaps
