#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "helpers.hpp"
#include "hypermaps/io.hpp"

using namespace hypermaps;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return (std::filesystem::path{HYPERMAPS_FIXTURE_DIR} / name).string();
}

}  // namespace

TEST_CASE("validate") {
    CHECK(run_cli({"validate", fixture("sphere_map.tau")}).code == 0);
    CHECK(run_cli({"validate", fixture("sphere_map.sigma")}).out == "ok: sigma\n");
    CHECK(run_cli({"validate", fixture("no_such_file.tau")}).code == 1);
    CHECK(run_cli({"validate"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("info") {
    auto hm0 = run_cli({"info", fixture("projective_hypermap.tau")});
    CHECK(hm0.code == 0);
    CHECK(hm0.out.find("euler_characteristic: 1") != std::string::npos);
    CHECK(hm0.out.find("orientable: no") != std::string::npos);
    CHECK(hm0.out.find("cross_caps: 1") != std::string::npos);
    CHECK(hm0.out.find("map: no") != std::string::npos);

    auto m1 = run_cli({"info", fixture("sphere_map.tau")});
    CHECK(m1.out.find("euler_characteristic: 2") != std::string::npos);
    CHECK(m1.out.find("genus: 0") != std::string::npos);
    CHECK(m1.out.find("map: yes") != std::string::npos);
    CHECK(m1.out.find("vertices: 2") != std::string::npos);
    CHECK(m1.out.find("hyperedges: 3") != std::string::npos);
    CHECK(m1.out.find("faces: 3") != std::string::npos);
}

TEST_CASE("dual") {
    auto dual = run_cli({"dual", fixture("sphere_map.tau"), "--type", "vertex", "--cells", "1"});
    CHECK(dual.code == 0);
    CHECK(dual.out == std::string("format: tau\nn: 12\n") +
                          "tau0: (1 11)(2 12)(3 10)(4 8)(5 9)(6 7)\n" +
                          "tau1: (1 6)(2 3)(4 5)(7 9)(8 10)(11 12)\n" +
                          "tau2: (1 2)(3 4)(5 6)(7 11)(8 9)(10 12)\n");

    auto sigma_dual =
        run_cli({"dual", fixture("sphere_map.sigma"), "--type", "vertex", "--cells", "1"});
    CHECK(sigma_dual.out == std::string("format: sigma\nn: 12\n") + "sigma_v: (1 5 3)(7 8 12)\n" +
                                "sigma_e: (1 12 3 8 5 7)\nsigma_f: (1 12 3 8 5 7)\n");

    // Dualizing twice over every cell of a type restores the canonical text.
    auto once = run_cli({"dual", fixture("sphere_hypermap.tau"), "--type", "face", "--all"});
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "hypermaps_face_dual.tau";
    {
        std::ofstream file(tmp);
        file << once.out;
    }
    auto twice = run_cli({"dual", tmp.string(), "--type", "face", "--all"});
    std::ifstream original(fixture("sphere_hypermap.tau"), std::ios::binary);
    std::ostringstream original_text;
    original_text << original.rdbuf();
    CHECK(twice.out == original_text.str());

    CHECK(run_cli({"dual", fixture("sphere_map.tau"), "--type", "vertex"}).code == 2);
    CHECK(run_cli({"dual", fixture("sphere_map.tau"), "--type", "vertex", "--cells", "1", "--all"})
              .code == 2);
    CHECK(run_cli({"dual", fixture("sphere_map.tau"), "--type", "tetrahedron", "--all"}).code == 2);
    CHECK(run_cli({"dual", fixture("sphere_map.tau"), "--type", "vertex", "--cells", "4"}).code == 1);
}

TEST_CASE("convert") {
    auto sigma = run_cli({"convert", fixture("sphere_map.tau"), "--to", "sigma"});
    CHECK(sigma.code == 0);
    CHECK(sigma.out.find("sigma_v: (1 3 5)(7 8 12)") != std::string::npos);
    CHECK(sigma.out.find("sigma_e: (1 7)(3 12)(5 8)") != std::string::npos);
    CHECK(sigma.out.find("sigma_f: (1 12)(3 8)(5 7)") != std::string::npos);
    CHECK(sigma.out.find("# plus_orbit: 1 3 5 7 8 12") != std::string::npos);

    CHECK(run_cli({"convert", fixture("projective_hypermap.tau"), "--to", "sigma"}).code == 1);

    auto colored = run_cli({"convert", fixture("projective_hypermap.tau"), "--to", "colored"});
    std::ifstream file(fixture("projective_hypermap.colored"), std::ios::binary);
    std::ostringstream expected;
    expected << file.rdbuf();
    CHECK(colored.out == expected.str());

    auto back = run_cli({"convert", fixture("projective_hypermap.colored"), "--to", "tau"});
    std::ifstream tau_file(fixture("projective_hypermap.tau"), std::ios::binary);
    std::ostringstream tau_text;
    tau_text << tau_file.rdbuf();
    CHECK(back.out == tau_text.str());
}

TEST_CASE("bubbles") {
    auto faces = run_cli({"bubbles", fixture("sphere_hypermap.tau"), "--colors", "0,1"});
    CHECK(faces.code == 0);
    CHECK(faces.out == "bubble: id=1 colors=0,1 vertices=1,2\n"
                       "bubble: id=3 colors=0,1 vertices=3,4\n"
                       "bubble: id=5 colors=0,1 vertices=5,6\n");
}

TEST_CASE("iso") {
    CHECK(run_cli({"iso", fixture("sphere_hypermap_face_dual.tau"), fixture("sphere_hypermap.tau")})
              .code == 0);
    CHECK(run_cli({"iso", fixture("projective_hypermap.colored"), fixture("sphere_hypermap.colored")})
              .code == 1);
    // The compact oriented file doubles to the flag model.
    CHECK(run_cli({"iso", fixture("sphere_hypermap.tau"), fixture("sphere_hypermap.sigma")}).code ==
          0);
    // The degree-12 oriented file carries six isolated half-edges on top of
    // the map, so it is not isomorphic to the bare flag model.
    CHECK(run_cli({"iso", fixture("sphere_map.tau"), fixture("sphere_map.sigma")}).code == 1);
}

TEST_CASE("random") {
    auto a = run_cli({"random", "--flags", "10", "--seed", "4"});
    auto b = run_cli({"random", "--flags", "10", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("format: tau") == 0);
    CHECK(run_cli({"random", "--flags", "7", "--seed", "4"}).code == 2);

    auto connected = run_cli({"random", "--flags", "10", "--seed", "4", "--connected"});
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "hypermaps_random.tau";
    {
        std::ofstream file(tmp);
        file << connected.out;
    }
    auto info = run_cli({"info", tmp.string()});
    CHECK(info.out.find("connected: yes") != std::string::npos);
}

TEST_CASE("export-dot") {
    auto a = run_cli({"export-dot", fixture("projective_hypermap.tau")});
    auto b = run_cli({"export-dot", fixture("projective_hypermap.colored")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("graph hypermap {") == 0);
    CHECK(a.out.find("1 -- 2") != std::string::npos);
}

TEST_CASE("recolor") {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "hypermaps_cube.colored";
    {
        std::ofstream file(tmp);
        file << io::serialize(test_helpers::cube_graph());
    }
    std::string original = io::serialize(test_helpers::cube_graph());

    auto once = run_cli({"recolor", tmp.string(), "--colors", "0,1,2", "--bubbles", "1", "--perm",
                         "(0 1 2)"});
    CHECK(once.code == 0);
    CHECK(once.out != original);

    std::filesystem::path tmp2 = std::filesystem::temp_directory_path() / "hypermaps_cube2.colored";
    {
        std::ofstream file(tmp2);
        file << once.out;
    }
    auto twice = run_cli({"recolor", tmp2.string(), "--colors", "0,1,2", "--bubbles", "1", "--perm",
                          "(0 1 2)"});
    std::filesystem::path tmp3 = std::filesystem::temp_directory_path() / "hypermaps_cube3.colored";
    {
        std::ofstream file(tmp3);
        file << twice.out;
    }
    auto thrice = run_cli({"recolor", tmp3.string(), "--colors", "0,1,2", "--bubbles", "1", "--perm",
                           "(0 1 2)"});
    CHECK(thrice.out == original);

    CHECK(run_cli({"recolor", tmp.string(), "--colors", "0,1,2", "--bubbles", "1", "--perm",
                   "(0 9)"})
              .code == 2);
}

TEST_CASE("suite") {
    auto result = run_cli({"suite", "--count", "3", "--max-size", "10", "--seed", "11"});
    CHECK(result.code == 0);
    CHECK(result.out.find("OK:") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);

    auto json = run_cli({"suite", "--count", "1", "--max-size", "8", "--seed", "2", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"all_passed\": true") != std::string::npos);
}
