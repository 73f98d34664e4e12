#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypermaps/convert.hpp"
#include "hypermaps/errors.hpp"
#include "hypermaps/harness.hpp"
#include "hypermaps/io.hpp"
#include "hypermaps/isomorphism.hpp"
#include "hypermaps/random.hpp"

namespace hypermaps::cli {

namespace {

const char* yes_no(bool value) { return value ? "yes" : "no"; }

ColoredGraph to_colored(const io::Document& doc) {
    if (const auto* g = std::get_if<ColoredGraph>(&doc)) return *g;
    if (const auto* hm = std::get_if<FlagHypermap>(&doc)) return tau_to_colored(*hm);
    return tau_to_colored(sigma_to_tau(std::get<OrientedHypermap>(doc)));
}

void print_surface(std::ostream& out, const SurfaceClass& surface) {
    out << "orientable: " << yes_no(surface.orientable) << "\n";
    out << "euler_characteristic: " << surface.euler_characteristic << "\n";
    out << (surface.orientable ? "genus: " : "cross_caps: ") << surface.genus << "\n";
}

void print_tau_info(std::ostream& out, const FlagHypermap& hm, int colors) {
    out << "n: " << hm.n_flags() << "\n";
    if (colors > 0) out << "colors: " << colors << "\n";
    out << "vertices: " << cells(hm, CellType::vertex).size() << "\n";
    out << "hyperedges: " << cells(hm, CellType::hyperedge).size() << "\n";
    out << "faces: " << cells(hm, CellType::face).size() << "\n";
    out << "connected: " << yes_no(is_connected(hm)) << "\n";
    out << "map: " << yes_no(is_map(hm)) << "\n";
    auto per_component = surfaces_by_component(hm);
    if (per_component.size() == 1) {
        print_surface(out, per_component.front().second);
    } else {
        out << "orientable: " << yes_no(is_orientable(hm)) << "\n";
        for (const auto& [min_flag, surface] : per_component)
            out << "component: min=" << min_flag << " chi=" << surface.euler_characteristic
                << " orientable=" << yes_no(surface.orientable)
                << (surface.orientable ? " genus=" : " cross_caps=") << surface.genus << "\n";
    }
}

void print_info(std::ostream& out, const io::Document& doc) {
    if (const auto* hm = std::get_if<FlagHypermap>(&doc)) {
        out << "model: tau\n";
        print_tau_info(out, *hm, 0);
        return;
    }
    if (const auto* hm = std::get_if<OrientedHypermap>(&doc)) {
        out << "model: sigma\n";
        out << "n: " << hm->n_halfedges() << "\n";
        out << "vertices: " << cells(*hm, CellType::vertex).size() << "\n";
        out << "hyperedges: " << cells(*hm, CellType::hyperedge).size() << "\n";
        out << "faces: " << cells(*hm, CellType::face).size() << "\n";
        out << "connected: " << yes_no(is_connected(*hm)) << "\n";
        out << "map: " << yes_no(is_map(*hm)) << "\n";
        auto per_component = euler_by_component(*hm);
        if (per_component.size() == 1) {
            int chi = per_component.front().second;
            out << "orientable: yes\n";
            out << "euler_characteristic: " << chi << "\n";
            out << "genus: " << (2 - chi) / 2 << "\n";
        } else {
            out << "orientable: yes\n";
            for (const auto& [min_halfedge, chi] : per_component)
                out << "component: min=" << min_halfedge << " chi=" << chi
                    << " genus=" << (2 - chi) / 2 << "\n";
        }
        return;
    }
    const auto& g = std::get<ColoredGraph>(doc);
    if (g.dimension() == 2) {
        out << "model: colored\n";
        print_tau_info(out, colored_to_tau(g), 3);
        return;
    }
    out << "model: colored\n";
    out << "n: " << g.n_vertices() << "\n";
    out << "colors: " << g.num_colors() << "\n";
    out << "connected: " << yes_no(is_connected(g)) << "\n";
    out << "bipartite: " << yes_no(is_bipartite(g)) << "\n";
    for (int k = 0; k <= g.dimension(); ++k)
        out << "bubbles_" << k << ": " << all_bubbles(g, k).size() << "\n";
}

io::Document dual_document(const io::Document& doc, CellType t, const std::vector<int>& ids,
                           bool all) {
    if (const auto* hm = std::get_if<FlagHypermap>(&doc))
        return all ? total_dual(*hm, t) : partial_dual(*hm, t, ids);
    if (const auto* hm = std::get_if<OrientedHypermap>(&doc))
        return all ? total_dual(*hm, t) : partial_dual(*hm, t, ids);
    const auto& g = std::get<ColoredGraph>(doc);
    if (g.dimension() != 2)
        throw BadDimension("duality by cell type needs a [2]-colored graph; use recolor");
    auto [a, b] = involution_pair(t);
    std::vector<int> bubble_ids = ids;
    if (all) {
        bubble_ids.clear();
        const std::vector<int> pair{a, b};
        for (const auto& bubble : bubbles(g, pair)) bubble_ids.push_back(bubble.canonical_id);
    }
    return swap_colors_in_bubbles(g, a, b, bubble_ids);
}

io::Document convert_document(const io::Document& doc, const std::string& target) {
    if (target == "colored") return to_colored(doc);
    if (target == "tau") {
        if (const auto* hm = std::get_if<FlagHypermap>(&doc)) return *hm;
        if (const auto* hm = std::get_if<OrientedHypermap>(&doc)) return sigma_to_tau(*hm);
        return colored_to_tau(std::get<ColoredGraph>(doc));
    }
    // sigma
    if (const auto* hm = std::get_if<OrientedHypermap>(&doc)) return *hm;
    FlagHypermap flags = std::holds_alternative<FlagHypermap>(doc)
                             ? std::get<FlagHypermap>(doc)
                             : colored_to_tau(std::get<ColoredGraph>(doc));
    return tau_to_sigma(flags).hypermap;
}

/// Cycle notation over a fixed color set, 0 allowed: "id" or e.g. "(0 1 2)".
std::map<int, int> parse_color_permutation(const std::string& text,
                                           const std::vector<int>& color_set) {
    std::map<int, int> pi;
    for (int c : color_set) pi[c] = c;
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first != std::string::npos && text.substr(first, last - first + 1) == "id") return pi;

    std::set<int> members(color_set.begin(), color_set.end());
    std::set<int> seen;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("expected \"id\" or a cycle of colors");
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in color permutation", 0,
                                               static_cast<int>(pos) + 1);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw ParseError("expected a color", 0, static_cast<int>(pos) + 1);
            int color = std::stoi(text.substr(start, pos - start));
            if (!members.count(color))
                throw ParseError("color " + std::to_string(color) + " is not in the color set", 0,
                                 static_cast<int>(start) + 1);
            if (!seen.insert(color).second)
                throw ParseError("color " + std::to_string(color) + " repeated", 0,
                                 static_cast<int>(start) + 1);
            cycle.push_back(color);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) pi[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return pi;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hypermap models, partial duality and invariants"};
    app.require_subcommand(1);
    int code = 0;

    std::string file, second_file, type_name, target, perm_text;
    std::vector<int> ids, colors;
    bool all_cells = false, connected = false, json_report = false;
    int flags = 0, count = 1000, max_size = 24;
    std::uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "parse a file and check its invariants");
    validate->add_option("file", file)->required();
    validate->callback([&] {
        auto doc = io::load_document(file);
        const char* model = std::holds_alternative<FlagHypermap>(doc)      ? "tau"
                            : std::holds_alternative<OrientedHypermap>(doc) ? "sigma"
                                                                             : "colored";
        out << "ok: " << model << "\n";
    });

    auto* info = app.add_subcommand("info", "counts, Euler characteristic, genus, flavor flags");
    info->add_option("file", file)->required();
    info->callback([&] { print_info(out, io::load_document(file)); });

    auto* dual = app.add_subcommand("dual", "partial dual relative to cells of one type");
    dual->add_option("file", file)->required();
    dual->add_option("--type", type_name)
        ->required()
        ->check(CLI::IsMember({"vertex", "edge", "hyperedge", "face"}));
    auto* cells_opt = dual->add_option("--cells", ids, "canonical cell ids")->delimiter(',');
    auto* all_opt = dual->add_flag("--all", all_cells, "dualize every cell of the type");
    dual->callback([&] {
        if (cells_opt->count() == all_opt->count())
            throw CLI::ValidationError("dual", "exactly one of --cells and --all is required");
        out << io::serialize(
            dual_document(io::load_document(file), cell_type_from_string(type_name), ids, all_cells));
    });

    auto* convert = app.add_subcommand("convert", "translate between the three models");
    convert->add_option("file", file)->required();
    convert->add_option("--to", target)->required()->check(CLI::IsMember({"sigma", "tau", "colored"}));
    convert->callback([&] {
        auto doc = io::load_document(file);
        auto result = convert_document(doc, target);
        out << io::serialize(result);
        if (target == "sigma" && !std::holds_alternative<OrientedHypermap>(doc)) {
            FlagHypermap flags_model = std::holds_alternative<FlagHypermap>(doc)
                                           ? std::get<FlagHypermap>(doc)
                                           : colored_to_tau(std::get<ColoredGraph>(doc));
            out << "# plus_orbit:";
            for (int x : tau_to_sigma(flags_model).plus_orbit) out << " " << x;
            out << "\n";
        }
    });

    auto* bubbles_cmd = app.add_subcommand("bubbles", "connected components of a color subset");
    bubbles_cmd->add_option("file", file)->required();
    bubbles_cmd->add_option("--colors", colors)->required()->delimiter(',');
    bubbles_cmd->callback([&] {
        ColoredGraph g = to_colored(io::load_document(file));
        for (const auto& bubble : bubbles(g, colors)) {
            out << "bubble: id=" << bubble.canonical_id << " colors=";
            for (std::size_t i = 0; i < bubble.colors.size(); ++i)
                out << (i ? "," : "") << bubble.colors[i];
            out << " vertices=";
            for (std::size_t i = 0; i < bubble.vertices.size(); ++i)
                out << (i ? "," : "") << bubble.vertices[i];
            out << "\n";
        }
    });

    auto* iso = app.add_subcommand("iso", "test two files for isomorphism");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", second_file)->required();
    iso->callback([&] {
        auto phi = are_isomorphic(to_colored(io::load_document(file)),
                                  to_colored(io::load_document(second_file)));
        if (!phi) {
            out << "not isomorphic\n";
            code = 1;
            return;
        }
        out << "isomorphic\nphi:";
        for (std::size_t v = 0; v < phi->size(); ++v)
            out << " " << v + 1 << "->" << (*phi)[v];
        out << "\n";
    });

    auto* random = app.add_subcommand("random", "seeded random involution-model hypermap");
    random->add_option("--flags", flags)->required();
    random->add_option("--seed", seed)->required();
    random->add_flag("--connected", connected);
    random->callback([&] {
        if (flags < 2 || flags % 2 != 0)
            throw CLI::ValidationError("random", "--flags must be even and at least 2");
        out << io::serialize(random_flag_hypermap(flags, seed, connected));
    });

    auto* dot = app.add_subcommand("export-dot", "Graphviz text for the colored graph");
    dot->add_option("file", file)->required();
    dot->callback([&] { out << io::export_dot(to_colored(io::load_document(file))); });

    auto* recolor = app.add_subcommand("recolor", "permute colors inside bubbles");
    recolor->add_option("file", file)->required();
    recolor->add_option("--colors", colors, "color set of size D")->required()->delimiter(',');
    recolor->add_option("--bubbles", ids, "canonical bubble ids")->required()->delimiter(',');
    recolor->add_option("--perm", perm_text, "cycle notation over the colors, e.g. \"(0 1 2)\"")
        ->required();
    recolor->callback([&] {
        std::map<int, int> pi;
        try {
            pi = parse_color_permutation(perm_text, colors);
        } catch (const ParseError& e) {
            throw CLI::ValidationError("recolor", e.what());
        }
        ColoredGraph g = to_colored(io::load_document(file));
        out << io::serialize(recolor_bubbles(g, colors, ids, pi));
    });

    auto* suite = app.add_subcommand("suite", "randomized property suite");
    suite->add_option("--count", count);
    suite->add_option("--max-size", max_size);
    suite->add_option("--seed", seed);
    suite->add_flag("--json", json_report);
    suite->callback([&] {
        PropertyReport report = run_property_suite(count, max_size, seed);
        out << report.to_text();
        if (json_report) out << report.to_json();
        if (!report.all_passed()) code = 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace hypermaps::cli
