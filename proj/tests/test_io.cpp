#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "helpers.hpp"
#include "hypermaps/convert.hpp"
#include "hypermaps/examples.hpp"
#include "hypermaps/io.hpp"

using namespace hypermaps;
using test_helpers::perm;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

}  // namespace

TEST_CASE("parsing the involution model") {
    auto doc = io::parse_document(
        "format: tau\nn: 6\ntau0: (1 2)(3 5)(4 6)\ntau1: (1 2)(3 4)(5 6)\ntau2: (1 6)(2 3)(4 5)\n");
    REQUIRE(std::holds_alternative<FlagHypermap>(doc));
    CHECK(std::get<FlagHypermap>(doc) == examples::projective_hypermap());
}

TEST_CASE("parsing the oriented model") {
    auto doc = io::parse_document(
        "format: sigma\nn: 12\nsigma_v: (1 3 5)(7 8 12)\nsigma_e: (1 7)(3 12)(5 8)\n"
        "sigma_f: (1 12)(3 8)(5 7)\n");
    REQUIRE(std::holds_alternative<OrientedHypermap>(doc));
    CHECK(std::get<OrientedHypermap>(doc) == examples::sphere_map_sigma());

    // sigma_f may be omitted.
    auto derived = io::parse_document("format: sigma\nn: 3\nsigma_v: (1 2 3)\nsigma_e: (1 3 2)\n");
    CHECK(std::get<OrientedHypermap>(derived) == examples::sphere_hypermap_sigma());

    CHECK_THROWS_AS(io::parse_document(
                        "format: sigma\nn: 3\nsigma_v: (1 2 3)\nsigma_e: (1 3 2)\nsigma_f: (1 2 3)\n"),
                    ValidationError);
}

TEST_CASE("parsing the colored model") {
    auto doc = io::parse_document(
        "format: colored\nn: 2\ncolors: 3\nedge: 1 2 0\nedge: 1 2 1\nedge: 1 2 2\n");
    REQUIRE(std::holds_alternative<ColoredGraph>(doc));
    CHECK(std::get<ColoredGraph>(doc).n_vertices() == 2);

    CHECK_THROWS_AS(
        io::parse_document("format: colored\nn: 2\ncolors: 3\nedge: 1 2 0\nedge: 1 2 0\n"),
        ValidationError);  // duplicate color slot
    CHECK_THROWS_AS(io::parse_document("format: colored\nn: 2\ncolors: 3\nedge: 1 2 0\n"),
                    ValidationError);  // missing colors
    CHECK_THROWS_AS(
        io::parse_document("format: colored\nn: 2\ncolors: 3\nedge: 1 1 0\nedge: 1 2 1\nedge: 1 2 2\n"),
        ParseError);  // loop
}

TEST_CASE("parse errors carry positions") {
    try {
        io::parse_document("format: tau\nn: 6\ntau0: (1 2.\ntau1: id\ntau2: id\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_document(""), ParseError);
    CHECK_THROWS_AS(io::parse_document("format: maps\nn: 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_document("format: tau\nn: zero\n"), ParseError);
    CHECK_THROWS_AS(io::parse_document("n: 6\nformat: tau\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    auto doc = io::parse_document(
        "# a projective hypermap\nformat: tau\n\nn: 6\ntau0: (1 2)(3 5)(4 6)  # hyperedge-face\n"
        "tau1: (1 2)(3 4)(5 6)\ntau2: (1 6)(2 3)(4 5)\n");
    CHECK(std::get<FlagHypermap>(doc) == examples::projective_hypermap());
}

TEST_CASE("serialization round trips") {
    for (const auto& [name, hm] : examples::all_flag_examples()) {
        CAPTURE(name);
        auto text = io::serialize(hm);
        CHECK(std::get<FlagHypermap>(io::parse_document(text)) == hm);
        CHECK(io::serialize(io::parse_document(text)) == text);
    }
    for (const auto& [name, hm] : examples::all_oriented_examples()) {
        CAPTURE(name);
        auto text = io::serialize(hm);
        CHECK(std::get<OrientedHypermap>(io::parse_document(text)) == hm);
        CHECK(io::serialize(io::parse_document(text)) == text);
    }
    auto graph = tau_to_colored(examples::projective_hypermap());
    auto text = io::serialize(graph);
    CHECK(std::get<ColoredGraph>(io::parse_document(text)) == graph);
    CHECK(io::serialize(io::parse_document(text)) == text);
}

TEST_CASE("shipped fixture files are canonical and valid") {
    const std::filesystem::path dir{HYPERMAPS_FIXTURE_DIR};
    int checked = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        auto text = read_file(entry.path());
        auto doc = io::parse_document(text);
        CHECK(io::serialize(doc) == text);
        ++checked;
    }
    CHECK(checked >= 12);

    CHECK(std::get<FlagHypermap>(io::load_document((dir / "sphere_map.tau").string())) ==
          examples::sphere_map());
    CHECK(std::get<OrientedHypermap>(io::load_document((dir / "sphere_map.sigma").string())) ==
          examples::sphere_map_sigma());
    CHECK(std::get<ColoredGraph>(io::load_document((dir / "projective_hypermap.colored").string())) ==
          tau_to_colored(examples::projective_hypermap()));
}

TEST_CASE("dot export") {
    auto hm0 = tau_to_colored(examples::projective_hypermap());
    auto dot = io::export_dot(hm0);
    CHECK(dot == io::export_dot(hm0));

    int nodes = 0, edges = 0;
    std::istringstream lines(dot);
    std::string line;
    int parallel_12 = 0;
    while (std::getline(lines, line)) {
        if (line.find(" -- ") != std::string::npos) {
            ++edges;
            if (line.find("1 -- 2 ") != std::string::npos) ++parallel_12;
        } else if (line.size() > 3 && line.back() == ';' && line.find('[') == std::string::npos) {
            ++nodes;
        }
    }
    CHECK(nodes == 6);
    CHECK(edges == 9);
    CHECK(parallel_12 == 2);  // flags 1 and 2 joined by colors 0 and 1

    ColoredGraph pair({perm(2, {{1, 2}}), perm(2, {{1, 2}}), perm(2, {{1, 2}}), perm(2, {{1, 2}})});
    auto pair_dot = io::export_dot(pair);
    int pair_edges = 0;
    std::istringstream pair_lines(pair_dot);
    while (std::getline(pair_lines, line))
        if (line.find(" -- ") != std::string::npos) ++pair_edges;
    CHECK(pair_edges == 4);
}
