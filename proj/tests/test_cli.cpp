#include "doctest.h"
#include "fixtures.hpp"

#include "steenrod/cli.hpp"
#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/io.hpp"
#include "steenrod/suites.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace steenrod;
using namespace steenrod::fixtures;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "steenrod_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    auto path = scratch() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JobResult job(const std::string& command, const std::string& input, std::optional<int> degree = {}) {
    JobSpec spec;
    spec.command = command;
    spec.inputs = {input};
    spec.degree = degree;
    return run(spec);
}

std::string generated(const std::string& kind, std::uint64_t seed, long p = 0, std::size_t levels = 3) {
    JobSpec spec;
    spec.command = "generate";
    spec.kind = kind;
    spec.seed = seed;
    spec.p = p;
    spec.levels = levels;
    auto r = run(spec);
    REQUIRE(r.exit_code == 0);
    return r.report;
}

}  // namespace

TEST_CASE("sha256 digests") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("degree ranges") {
    CHECK(parse_range("0:3") == std::pair{0, 3});
    CHECK(parse_range("-1..2") == std::pair{-1, 2});
    CHECK_THROWS_AS(parse_range("1-2"), ParseError);
    CHECK_THROWS_AS(parse_range("a:2"), ParseError);
}

TEST_CASE("documents round-trip") {
    CorpusGenerator gen(41);
    for (int trial = 0; trial < 5; ++trial) {
        auto c = gen.complex();
        CHECK(complex_from_json(Json::parse(to_json(c).dump())) == c);
        auto f = gen.chain_map();
        CHECK(GradedMap(chain_map_from_json(to_json(f))) == GradedMap(f));
        auto t = gen.map_tower(3);
        auto back = map_tower_from_json(to_json(t));
        for (std::size_t i = 0; i < 3; ++i) CHECK(GradedMap(back.maps[i]) == GradedMap(t.maps[i]));
        auto s = gen.simplicial_map();
        auto sb = simplicial_map_from_json(to_json(s));
        CHECK(sb.vertex_map == s.vertex_map);
        CHECK(GradedMap(chain_map_of(sb)) == GradedMap(chain_map_of(s)));
        auto ge = gen.group_with_endo(false);
        auto gt = group_tower_from_json(to_json(GroupTower::constant(ge.group, ge.endo)));
        CHECK(inverse_limit(gt).isomorphic(inverse_limit(GroupTower::constant(ge.group, ge.endo))));
    }
    // large entries survive as strings
    auto z = Json::parse(R"({"kind":"complex","lo":0,"ranks":[1,1],"differentials":[[["123456789012345678901234567890"]]]})");
    CHECK(complex_from_json(z).differential(1)(0, 0).get_str() == "123456789012345678901234567890");
}

TEST_CASE("malformed documents are parse errors") {
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"cw_complex"})"), ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"kind":"complex","lo":0,"ranks":[1,1],"differentials":[]})")),
                    ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"kind":"complex","lo":0,"ranks":[1,1],"differentials":[[["x"]]]})")),
                    ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"kind":"complex","lo":0,"ranks":[1,1],"differentials":[[[1,2]]]})")),
                    ParseError);
    // well formed but d d != 0
    CHECK_THROWS_AS(complex_from_json(Json::parse(
                        R"({"kind":"complex","lo":0,"ranks":[1,1,1],"differentials":[[[1]],[[1]]]})")),
                    ValidationError);
}

TEST_CASE("strong on the solenoid pair matches the library") {
    auto path = write("solenoid_pair.json", generated("map_tower", 0, 2, 3));
    auto r = job("strong", path, 1);
    REQUIRE(r.exit_code == 0);
    auto report = Json::parse(r.report);
    CHECK(report["result"]["strong_homology"]["1"]["text"] == "Z");
    CHECK(report["certificates"]["finite_truncation"] == true);
    CHECK(report["input_digest"] == sha256_hex(slurp(path)));
    CHECK(report["convention_version"] == kConventionVersion);

    auto f = map_tower_from_json(Json::parse(slurp(path)));
    CHECK(strong_homology(f, 1).to_string() == "Z");
    // the same pair written at chain level
    auto chain_level = constant_map_tower(base_point(), 3);
    chain_level.codomain = doubling_tower(3);
    CHECK(strong_homology(chain_level, 1).isomorphic(strong_homology(f, 1)));
}

TEST_CASE("milnor reports") {
    auto path = write("tower.json", generated("map_tower", 5));
    auto r = job("milnor", path, 0);
    REQUIRE(r.exit_code == 0);
    auto report = Json::parse(r.report);
    auto f = map_tower_from_json(Json::parse(slurp(path)));
    auto expected = milnor_report(f, 0);
    const auto& deg = report["result"]["degrees"][0];
    CHECK(deg["strong"]["text"] == expected.strong_group.to_string());
    CHECK(deg["lim"]["text"] == expected.lim.to_string());
    CHECK(deg["lim1"]["text"] == expected.lim1.to_string());
    CHECK(report["certificates"]["exact"] == true);

    // lim / lim1 of (Z, x2)
    auto g = write("z2.json", generated("group_tower", 0, 2));
    auto gr = Json::parse(job("milnor", g).report);
    CHECK(gr["result"]["lim"]["text"] == "0");
    CHECK(gr["result"]["lim1"]["zero"] == false);
}

TEST_CASE("homology, cone and les commands") {
    auto sol = write("solenoid.json", generated("tower", 0, 3, 2));
    auto h = Json::parse(job("homology", sol).report);
    CHECK(h["result"]["levels"][1]["1"]["text"] == "Z");
    CHECK(h["result"]["induced_bonds"][1]["bonds"][0]["matrix"][0][0].get<std::string>().find('3') != std::string::npos);

    Json moore;
    moore["kind"] = "simplicial_map";
    moore["source"] = to_json(SimplicialComplex::circle(6));
    moore["target"] = to_json(SimplicialComplex::circle(3));
    moore["vertex_map"] = {0, 1, 2, 0, 1, 2};
    auto c = job("cone", write("moore.json", moore.dump()));
    REQUIRE(c.exit_code == 0);
    auto cr = Json::parse(c.report);
    CHECK(cr["result"]["homology"]["1"]["text"] == "Z/2");
    CHECK(cr["certificates"]["simplicial_comparison"] == true);

    auto les = job("les", write("les_input.json", generated("map_tower", 9)));
    CHECK(les.exit_code == 0);
    CHECK(Json::parse(les.report)["certificates"]["exact"] == true);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(job("homology", write("broken.json", "{\"kind\": ")).exit_code == 2);
    auto dd = job("homology", write("dd.json", R"({"kind":"complex","lo":0,"ranks":[1,1,1],"differentials":[[[1]],[[1]]]})"));
    CHECK(dd.exit_code == 2);
    CHECK(Json::parse(dd.report)["error"]["type"] == "ValidationError");
    CHECK(job("homology", (scratch() / "missing.json").string()).exit_code == 2);
    CHECK(job("strong", write("short.json", generated("map_tower", 3, 0, 1))).exit_code == 2);

    JobSpec spec;
    spec.command = "verify";
    spec.suite = "no_such_suite";
    CHECK(run(spec).exit_code == 2);
}

TEST_CASE("verify: passing suite and deterministic reports") {
    JobSpec spec;
    spec.command = "verify";
    spec.suite = "sigma_partial";
    spec.seed = 7;
    spec.count = 100;
    auto a = run(spec);
    CHECK(a.exit_code == 0);
    auto report = Json::parse(a.report);
    CHECK(report["result"]["passed"] == 100);

    spec.threads = 3;
    CHECK(run(spec).report == a.report);

    for (const auto& suite : suite_names()) {
        JobSpec s;
        s.command = "verify";
        s.suite = suite;
        s.seed = 11;
        s.count = 4;
        auto one = run(s);
        CHECK_MESSAGE(one.exit_code == 0, suite);
        s.threads = 2;
        CHECK_MESSAGE(run(s).report == one.report, suite);
    }
}

TEST_CASE("command-line binary") {
    const std::string cli = STEENROD_CLI_PATH;
    auto out = (scratch() / "bin_pair.json").string();
    auto report = (scratch() / "bin_report.json").string();
    CHECK(std::system((cli + " generate --kind map_tower --p 2 --levels 3 -o " + out + " 2>/dev/null").c_str()) == 0);
    CHECK(std::system((cli + " strong -i " + out + " -d 1 -o " + report + " 2>/dev/null").c_str()) == 0);
    CHECK(Json::parse(slurp(report))["result"]["strong_homology"]["1"]["text"] == "Z");

    auto bad = write("bin_bad.json", "not json");
    int status = std::system((cli + " homology -i " + bad + " >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 2);
    status = std::system((cli + " frobnicate >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
