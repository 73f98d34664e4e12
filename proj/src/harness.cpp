#include "hypermaps/harness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "hypermaps/checks.hpp"
#include "hypermaps/convert.hpp"
#include "hypermaps/examples.hpp"
#include "hypermaps/isomorphism.hpp"
#include "hypermaps/random.hpp"

namespace hypermaps {

bool PropertyReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

int PropertyReport::total_runs() const {
    int total = 0;
    for (const auto& r : results) total += r.runs;
    return total;
}

int PropertyReport::total_failures() const {
    int total = 0;
    for (const auto& r : results) total += r.failures;
    return total;
}

void PropertyReport::record(const std::string& property, bool ok, const std::string& instance) {
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const auto& r) { return r.name == property; });
    if (it == results.end()) {
        results.push_back(PropertyResult{property, 0, 0, {}});
        it = results.end() - 1;
    }
    ++it->runs;
    if (!ok) {
        ++it->failures;
        it->failing.push_back(instance);
    }
}

std::string PropertyReport::to_text() const {
    std::vector<const PropertyResult*> sorted;
    for (const auto& r : results) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->name < b->name; });
    std::string out;
    for (const auto* r : sorted) {
        out += r->passed() ? "PASS " : "FAIL ";
        out += r->name + " runs=" + std::to_string(r->runs);
        if (!r->passed()) {
            out += " failures=" + std::to_string(r->failures) + " [";
            for (std::size_t i = 0; i < r->failing.size() && i < 10; ++i) {
                if (i > 0) out += ", ";
                out += r->failing[i];
            }
            if (r->failing.size() > 10) out += ", ...";
            out += "]";
        }
        out += '\n';
    }
    out += (all_passed() ? "OK" : "FAILED");
    out += ": " + std::to_string(results.size()) + " properties, " + std::to_string(total_runs()) +
           " runs, " + std::to_string(total_failures()) + " failures\n";
    return out;
}

std::string PropertyReport::to_json() const {
    nlohmann::json j;
    j["all_passed"] = all_passed();
    j["total_runs"] = total_runs();
    j["total_failures"] = total_failures();
    auto& props = j["properties"] = nlohmann::json::array();
    std::vector<const PropertyResult*> sorted;
    for (const auto& r : results) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->name < b->name; });
    for (const auto* r : sorted) {
        nlohmann::json entry;
        entry["name"] = r->name;
        entry["runs"] = r->runs;
        entry["failures"] = r->failures;
        entry["failing"] = r->failing;
        props.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

namespace {

constexpr CellType kTypes[3] = {CellType::vertex, CellType::hyperedge, CellType::face};

/// A throwing check is a failing check; the seed in the report reproduces it.
template <typename Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (...) {
        return false;
    }
}

std::vector<int> cell_ids(const std::vector<Cell>& all) {
    std::vector<int> ids;
    for (const auto& cell : all) ids.push_back(cell.ref.canonical_id);
    return ids;
}

std::vector<int> random_subset(const std::vector<int>& ids, Lcg64& rng) {
    std::vector<int> subset;
    for (int id : ids)
        if (rng.below(2) == 1) subset.push_back(id);
    return subset;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end());
    std::set<int> sb(b.begin(), b.end());
    std::vector<int> out;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(out));
    return out;
}

template <typename Hypermap>
bool single_cell_composition(const Hypermap& hm, CellType t, const std::vector<int>& subset,
                             const std::vector<int>& all_ids, Lcg64& rng) {
    std::set<int> in_subset(subset.begin(), subset.end());
    std::vector<int> rest;
    for (int id : all_ids)
        if (!in_subset.count(id)) rest.push_back(id);
    if (rest.empty()) return true;
    int extra = rest[rng.below(rest.size())];
    std::vector<int> grown = subset;
    grown.push_back(extra);
    std::vector<int> just_extra{extra};
    return partial_dual(hm, t, grown) == partial_dual(partial_dual(hm, t, subset), t, just_extra);
}

template <typename Hypermap>
bool symmetric_difference_law(const Hypermap& hm, CellType t, const std::vector<int>& first,
                              const std::vector<int>& second) {
    return partial_dual(partial_dual(hm, t, first), t, second) ==
           partial_dual(hm, t, symmetric_difference(first, second));
}

bool tau_total_dual_preserves_chi(const FlagHypermap& hm, CellType t) {
    auto before = surfaces_by_component(hm);
    auto after = surfaces_by_component(total_dual(hm, t));
    if (before.size() != after.size()) return false;
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i].first != after[i].first ||
            before[i].second.euler_characteristic != after[i].second.euler_characteristic)
            return false;
    return true;
}

bool recolor_transposition_equals_swap(const FlagHypermap& hm, CellType t,
                                       const std::vector<int>& ids) {
    auto [a, b] = involution_pair(t);
    ColoredGraph graph = tau_to_colored(hm);
    std::map<int, int> swap_pi{{a, b}, {b, a}};
    std::vector<int> color_set{a, b};
    return recolor_bubbles(graph, color_set, ids, swap_pi) ==
           swap_colors_in_bubbles(graph, a, b, ids);
}

void run_tau_checks(const FlagHypermap& hm, const std::string& id, Lcg64& rng,
                    PropertyReport& report) {
    CellType t = kTypes[rng.below(3)];
    auto all_ids = cell_ids(cells(hm, t));
    auto subset = random_subset(all_ids, rng);
    FlagHypermap dual = partial_dual(hm, t, subset);

    report.record("tau double dual identity",
                  guarded([&] { return checks::tau_double_dual(hm, t, subset, dual); }), id);
    report.record("tau dual matches product form",
                  guarded([&] { return checks::tau_dual_product_form(hm, t, subset, dual); }), id);
    report.record("tau cell supports preserved",
                  guarded([&] { return checks::tau_cell_supports_preserved(hm, t, dual); }), id);
    report.record("tau orientability preserved",
                  guarded([&] { return checks::orientability_preserved(hm, dual); }), id);
    report.record("tau single cell composition",
                  guarded([&] { return single_cell_composition(hm, t, subset, all_ids, rng); }), id);
    report.record("tau symmetric difference", guarded([&] {
                      return symmetric_difference_law(hm, t, subset, random_subset(all_ids, rng));
                  }),
                  id);
    report.record("tau total dual preserves chi",
                  guarded([&] { return tau_total_dual_preserves_chi(hm, t); }), id);
    report.record("colored swap matches tau dual",
                  guarded([&] { return checks::colored_swap_matches_tau_dual(hm, t, subset, dual); }),
                  id);
    report.record("colored bipartite equals tau orientability",
                  guarded([&] { return is_bipartite(tau_to_colored(hm)) == is_orientable(hm); }),
                  id);
    report.record("colored recolor transposition equals swap",
                  guarded([&] { return recolor_transposition_equals_swap(hm, t, subset); }), id);
    report.record("chi agreement tau colored",
                  guarded([&] { return checks::chi_agreement_tau_colored(hm); }), id);
    if (is_orientable(hm))
        report.record("chi agreement tau sigma",
                      guarded([&] { return checks::chi_agreement_tau_sigma(hm); }), id);
}

bool sigma_total_dual_closed_forms(const OrientedHypermap& hm) {
    const Permutation vi = hm.sigma_v().inverse();
    const Permutation ei = hm.sigma_e().inverse();
    const Permutation fi = hm.sigma_f().inverse();
    return total_dual(hm, CellType::vertex) == OrientedHypermap(vi, fi, ei) &&
           total_dual(hm, CellType::hyperedge) == OrientedHypermap(fi, ei, vi) &&
           total_dual(hm, CellType::face) == OrientedHypermap(ei, vi, fi);
}

bool sigma_tau_round_trip(const OrientedHypermap& hm) {
    auto converted = tau_to_sigma(sigma_to_tau(hm));
    std::vector<int> expected_plus;
    for (int i = 1; i <= hm.n_halfedges(); ++i) expected_plus.push_back(2 * i - 1);
    if (converted.plus_orbit != expected_plus) return false;
    // Compact flag 2i-1 back to half-edge i.
    auto compact = [&](const Permutation& p) {
        std::vector<int> images(static_cast<std::size_t>(hm.n_halfedges()));
        for (int i = 1; i <= hm.n_halfedges(); ++i)
            images[static_cast<std::size_t>(i) - 1] = (p(2 * i - 1) + 1) / 2;
        return Permutation::from_images(std::move(images));
    };
    return compact(converted.hypermap.sigma_v()) == hm.sigma_v() &&
           compact(converted.hypermap.sigma_e()) == hm.sigma_e() &&
           compact(converted.hypermap.sigma_f()) == hm.sigma_f();
}

bool reversal_doubling_isomorphic(const OrientedHypermap& hm) {
    OrientedHypermap reversed = reverse_orientation(hm);
    if (!(reverse_orientation(reversed) == hm)) return false;
    return are_isomorphic(tau_to_colored(sigma_to_tau(reversed)),
                          tau_to_colored(sigma_to_tau(hm)))
        .has_value();
}

void run_sigma_checks(const OrientedHypermap& hm, const std::string& id, Lcg64& rng,
                      PropertyReport& report) {
    CellType t = kTypes[rng.below(3)];
    auto all_ids = cell_ids(cells(hm, t));
    auto subset = random_subset(all_ids, rng);
    OrientedHypermap dual = partial_dual(hm, t, subset);

    report.record("sigma relation closure", guarded([&] { return checks::sigma_relation(dual); }),
                  id);
    report.record("sigma double dual identity",
                  guarded([&] { return checks::sigma_double_dual(hm, t, subset, dual); }), id);
    report.record(
        "sigma cells inverted in place",
        guarded([&] { return checks::sigma_cells_inverted_in_place(hm, t, subset, dual); }), id);
    report.record("sigma single cell composition",
                  guarded([&] { return single_cell_composition(hm, t, subset, all_ids, rng); }), id);
    report.record("sigma symmetric difference", guarded([&] {
                      return symmetric_difference_law(hm, t, subset, random_subset(all_ids, rng));
                  }),
                  id);
    report.record("sigma total dual closed forms",
                  guarded([&] { return sigma_total_dual_closed_forms(hm); }), id);
    report.record("sigma tau doubling round trip", guarded([&] { return sigma_tau_round_trip(hm); }),
                  id);
    report.record("sigma reversal doubling isomorphic",
                  guarded([&] { return reversal_doubling_isomorphic(hm); }), id);
    report.record("cross model duality commutes",
                  guarded([&] { return checks::cross_model_duality_commutes(hm, t, subset); }), id);
    report.record("chi agreement sigma doubling",
                  guarded([&] { return checks::chi_agreement_sigma_doubling(hm); }), id);
}

std::map<int, int> random_color_bijection(const std::vector<int>& colors, Lcg64& rng) {
    std::vector<int> images = colors;
    for (std::size_t i = images.size() - 1; i > 0; --i)
        std::swap(images[i], images[rng.below(i + 1)]);
    std::map<int, int> pi;
    for (std::size_t i = 0; i < colors.size(); ++i) pi[colors[i]] = images[i];
    return pi;
}

std::map<int, int> compose_color_maps(const std::map<int, int>& second,
                                      const std::map<int, int>& first) {
    std::map<int, int> out;
    for (const auto& [c, mid] : first) out[c] = second.at(mid);
    return out;
}

std::map<int, int> invert_color_map(const std::map<int, int>& pi) {
    std::map<int, int> out;
    for (const auto& [c, image] : pi) out[image] = c;
    return out;
}

void run_colored_checks(std::uint64_t seed, PropertyReport& report) {
    const std::string id = "seed=" + std::to_string(seed);
    Lcg64 rng(seed);
    const int n = 2 * (2 + static_cast<int>(rng.below(5)));  // even, 4..12
    std::vector<Permutation> matchings;
    for (int c = 0; c < 4; ++c) matchings.push_back(random_matching(n, rng));
    ColoredGraph g(std::move(matchings));

    const int excluded = static_cast<int>(rng.below(4));
    std::vector<int> color_set;
    for (int c = 0; c < 4; ++c)
        if (c != excluded) color_set.push_back(c);

    auto pool = bubbles(g, color_set);
    std::vector<int> all_ids;
    for (const auto& bubble : pool) all_ids.push_back(bubble.canonical_id);
    auto subset = random_subset(all_ids, rng);
    auto pi1 = random_color_bijection(color_set, rng);
    auto pi2 = random_color_bijection(color_set, rng);

    std::map<int, int> identity_pi;
    for (int c : color_set) identity_pi[c] = c;
    report.record("colored recolor identity",
                  guarded([&] { return recolor_bubbles(g, color_set, subset, identity_pi) == g; }),
                  id);
    report.record("colored recolor inverse restores", guarded([&] {
                      return recolor_bubbles(recolor_bubbles(g, color_set, subset, pi1), color_set,
                                             subset, invert_color_map(pi1)) == g;
                  }),
                  id);
    report.record("colored recolor composition", guarded([&] {
                      return recolor_bubbles(recolor_bubbles(g, color_set, subset, pi1), color_set,
                                             subset, pi2) ==
                             recolor_bubbles(g, color_set, subset, compose_color_maps(pi2, pi1));
                  }),
                  id);
    report.record("colored recolor keeps underlying graph", guarded([&] {
                      return edge_multiset(recolor_bubbles(g, color_set, subset, pi1)) ==
                             edge_multiset(g);
                  }),
                  id);

    // An involutive recoloring obeys the symmetric-difference law; higher
    // order permutations do not, so only this case is asserted.
    std::map<int, int> involution = identity_pi;
    involution[color_set[0]] = color_set[1];
    involution[color_set[1]] = color_set[0];
    auto subset2 = random_subset(all_ids, rng);
    report.record("colored recolor involution symmetric difference", guarded([&] {
                      return recolor_bubbles(recolor_bubbles(g, color_set, subset, involution),
                                             color_set, subset2, involution) ==
                             recolor_bubbles(g, color_set, symmetric_difference(subset, subset2),
                                             involution);
                  }),
                  id);
}

FlagHypermap random_tau_instance(int max_size, Lcg64& rng) {
    const int half_max = std::max(1, max_size / 2);
    const int n = 2 * (1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(half_max))));
    Permutation t0 = random_matching(n, rng);
    Permutation t1 = random_matching(n, rng);
    Permutation t2 = random_matching(n, rng);
    return FlagHypermap(std::move(t0), std::move(t1), std::move(t2));
}

OrientedHypermap random_sigma_instance(int max_size, Lcg64& rng) {
    const int cap = std::max(1, max_size / 2);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
    Permutation sigma_v = random_permutation(n, rng);
    Permutation sigma_e = random_permutation(n, rng);
    return OrientedHypermap::make(sigma_v, sigma_e);
}

}  // namespace

PropertyReport run_property_suite(int count, int max_size, std::uint64_t seed) {
    PropertyReport report;
    Lcg64 master(seed);

    for (const auto& [name, hm] : examples::all_flag_examples()) {
        Lcg64 rng(master.next());
        run_tau_checks(hm, "example:" + name, rng, report);
    }
    for (const auto& [name, hm] : examples::all_oriented_examples()) {
        Lcg64 rng(master.next());
        run_sigma_checks(hm, "example:" + name, rng, report);
    }

    for (int i = 0; i < count; ++i) {
        {
            std::uint64_t instance_seed = master.next();
            Lcg64 rng(instance_seed);
            FlagHypermap hm = random_tau_instance(max_size, rng);
            run_tau_checks(hm, "tau-seed=" + std::to_string(instance_seed), rng, report);
        }
        {
            std::uint64_t instance_seed = master.next();
            Lcg64 rng(instance_seed);
            OrientedHypermap hm = random_sigma_instance(max_size, rng);
            run_sigma_checks(hm, "sigma-seed=" + std::to_string(instance_seed), rng, report);
        }
        run_colored_checks(master.next(), report);
    }
    return report;
}

}  // namespace hypermaps
