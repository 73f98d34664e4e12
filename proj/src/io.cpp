#include "hypermaps/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hypermaps/errors.hpp"

namespace hypermaps::io {

namespace {

struct Line {
    int number = 0;
    std::string key;
    std::string value;
    int value_column = 0;
};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<Line> key_value_lines(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream stream{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (trim(raw).empty()) continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected \"key: value\"", number, 1);
        Line line;
        line.number = number;
        line.key = trim(raw.substr(0, colon));
        line.value = trim(raw.substr(colon + 1));
        line.value_column = static_cast<int>(colon) + 2;
        if (line.key.empty()) throw ParseError("missing key before ':'", number, 1);
        lines.push_back(std::move(line));
    }
    return lines;
}

int parse_positive_int(const Line& line, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(line.value, &used);
        if (used != line.value.size() || value < 1) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected a positive integer for ") + what, line.number,
                         line.value_column);
    }
}

Permutation parse_perm_line(const Line& line, int degree) {
    try {
        return parse_cycles(line.value, degree);
    } catch (const ParseError& e) {
        int column = e.column > 0 ? line.value_column + e.column - 1 : line.value_column;
        throw ParseError(e.message, line.number, column);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), line.number, line.value_column);
    }
}

const Line& expect_key(const std::vector<Line>& lines, std::size_t index, const std::string& key) {
    if (index >= lines.size())
        throw ParseError("missing \"" + key + ":\" line",
                         lines.empty() ? 1 : lines.back().number, 0);
    if (lines[index].key != key)
        throw ParseError("expected \"" + key + ":\", found \"" + lines[index].key + ":\"",
                         lines[index].number, 1);
    return lines[index];
}

Document parse_sigma(const std::vector<Line>& lines, int n) {
    Permutation sigma_v = parse_perm_line(expect_key(lines, 2, "sigma_v"), n);
    Permutation sigma_e = parse_perm_line(expect_key(lines, 3, "sigma_e"), n);
    OrientedHypermap derived = OrientedHypermap::make(sigma_v, sigma_e);
    if (lines.size() > 4) {
        const Line& line = expect_key(lines, 4, "sigma_f");
        Permutation sigma_f = parse_perm_line(line, n);
        if (!(sigma_f == derived.sigma_f()))
            throw ValidationError("sigma_f at line " + std::to_string(line.number) +
                                  " contradicts (sigma_e sigma_v)^-1");
        if (lines.size() > 5)
            throw ParseError("unexpected line after sigma_f", lines[5].number, 1);
    }
    return derived;
}

Document parse_tau(const std::vector<Line>& lines, int n) {
    Permutation t0 = parse_perm_line(expect_key(lines, 2, "tau0"), n);
    Permutation t1 = parse_perm_line(expect_key(lines, 3, "tau1"), n);
    Permutation t2 = parse_perm_line(expect_key(lines, 4, "tau2"), n);
    if (lines.size() > 5) throw ParseError("unexpected line after tau2", lines[5].number, 1);
    return FlagHypermap(std::move(t0), std::move(t1), std::move(t2));
}

Document parse_colored(const std::vector<Line>& lines, int n) {
    int num_colors = parse_positive_int(expect_key(lines, 2, "colors"), "colors");
    if (num_colors < 2) throw ValidationError("a colored graph needs at least two colors");

    std::vector<std::vector<int>> images(static_cast<std::size_t>(num_colors));
    for (auto& im : images) {
        im.resize(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) im[static_cast<std::size_t>(v) - 1] = 0;
    }
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const Line& line = expect_key(lines, i, "edge");
        std::istringstream fields(line.value);
        int u = 0, v = 0, c = 0;
        if (!(fields >> u >> v >> c) || !(fields >> std::ws).eof())
            throw ParseError("expected \"edge: u v c\"", line.number, line.value_column);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge endpoint outside {1.." + std::to_string(n) + "}", line.number,
                             line.value_column);
        if (u == v) throw ParseError("loops are not allowed", line.number, line.value_column);
        if (c < 0 || c >= num_colors)
            throw ParseError("color outside {0.." + std::to_string(num_colors - 1) + "}",
                             line.number, line.value_column);
        auto& im = images[static_cast<std::size_t>(c)];
        if (im[static_cast<std::size_t>(u) - 1] != 0 || im[static_cast<std::size_t>(v) - 1] != 0)
            throw ValidationError("vertex with two edges of color " + std::to_string(c) +
                                  " at line " + std::to_string(line.number));
        im[static_cast<std::size_t>(u) - 1] = v;
        im[static_cast<std::size_t>(v) - 1] = u;
    }
    std::vector<Permutation> matchings;
    for (int c = 0; c < num_colors; ++c) {
        auto& im = images[static_cast<std::size_t>(c)];
        for (int v = 1; v <= n; ++v)
            if (im[static_cast<std::size_t>(v) - 1] == 0)
                throw ValidationError("vertex " + std::to_string(v) + " has no edge of color " +
                                      std::to_string(c));
        matchings.push_back(Permutation::from_images(std::move(im)));
    }
    return ColoredGraph(std::move(matchings));
}

}  // namespace

Document parse_document(std::string_view text) {
    auto lines = key_value_lines(text);
    const Line& format = expect_key(lines, 0, "format");
    int n = parse_positive_int(expect_key(lines, 1, "n"), "n");
    if (format.value == "sigma") return parse_sigma(lines, n);
    if (format.value == "tau") return parse_tau(lines, n);
    if (format.value == "colored") return parse_colored(lines, n);
    throw ParseError("unknown format \"" + format.value + "\" (expected sigma, tau or colored)",
                     format.number, format.value_column);
}

Document load_document(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    std::ostringstream content;
    content << file.rdbuf();
    return parse_document(content.str());
}

std::string serialize(const FlagHypermap& hm) {
    std::string out = "format: tau\nn: " + std::to_string(hm.n_flags()) + "\n";
    for (int i = 0; i < 3; ++i)
        out += "tau" + std::to_string(i) + ": " + format_cycles(hm.tau(i)) + "\n";
    return out;
}

std::string serialize(const OrientedHypermap& hm) {
    return "format: sigma\nn: " + std::to_string(hm.n_halfedges()) +
           "\nsigma_v: " + format_cycles(hm.sigma_v()) +
           "\nsigma_e: " + format_cycles(hm.sigma_e()) +
           "\nsigma_f: " + format_cycles(hm.sigma_f()) + "\n";
}

std::string serialize(const ColoredGraph& g) {
    std::string out = "format: colored\nn: " + std::to_string(g.n_vertices()) +
                      "\ncolors: " + std::to_string(g.num_colors()) + "\n";
    for (int c = 0; c < g.num_colors(); ++c)
        for (int v = 1; v <= g.n_vertices(); ++v)
            if (v < g.matching(c)(v))
                out += "edge: " + std::to_string(v) + " " + std::to_string(g.matching(c)(v)) + " " +
                       std::to_string(c) + "\n";
    return out;
}

std::string serialize(const Document& doc) {
    return std::visit([](const auto& value) { return serialize(value); }, doc);
}

std::string export_dot(const ColoredGraph& g) {
    static const char* kPalette[] = {"#377eb8", "#e41a1c", "#4daf4a", "#984ea3",
                                     "#ff7f00", "#a65628", "#f781bf", "#999999"};
    constexpr int kPaletteSize = 8;
    std::string out = "graph hypermap {\n  node [shape=circle];\n";
    for (int v = 1; v <= g.n_vertices(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int c = 0; c < g.num_colors(); ++c)
        for (int v = 1; v <= g.n_vertices(); ++v)
            if (v < g.matching(c)(v))
                out += "  " + std::to_string(v) + " -- " + std::to_string(g.matching(c)(v)) +
                       " [color=\"" + kPalette[c % kPaletteSize] + "\", label=\"" +
                       std::to_string(c) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace hypermaps::io
