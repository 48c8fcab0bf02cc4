#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "zono/cli.hpp"
#include "zono/numeric.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using zono::cli::run;

namespace {

const fs::path kInputs = ZONO_INPUT_DIR;

std::string input(const std::string& name) { return (kInputs / name).string(); }

std::string scratch_file(const std::string& name, const std::string& contents) {
    const fs::path p = fs::temp_directory_path() / ("zono_cli_test_" + name);
    std::ofstream(p) << contents;
    return p.string();
}

json ok(const std::vector<std::string>& args) {
    const auto r = run(args);
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    return json::parse(r.out);
}

json fails(const std::vector<std::string>& args, int exit_code, const std::string& code) {
    const auto r = run(args);
    CHECK(r.exit_code == exit_code);
    CHECK(r.out.empty());
    const auto e = json::parse(r.err);
    CHECK(e["code"] == code);
    return e;
}

std::vector<zono::Rational> reparse(const json& arr) {
    std::vector<zono::Rational> v;
    for (const auto& x : arr)
        v.push_back(x.is_string() ? zono::parse_rational(x.get<std::string>()) : zono::Rational(x.get<std::int64_t>()));
    return v;
}

}  // namespace

TEST_CASE("ehrhart command") {
    CHECK(ok({"ehrhart", input("hexagon.json")})["ehrhart"] == json::array({1, 3, 3}));
    const auto both = ok({"ehrhart", input("hexagon.json"), "--method", "both"});
    CHECK(both["ehrhart"] == json::array({1, 3, 3}));
    CHECK(both["agree"] == true);
    CHECK(ok({"ehrhart", input("flat.json"), "--method", "both"})["ehrhart"] == json::array({1, 3}));
    CHECK(ok({"ehrhart", input("square_typeB.json")})["ehrhart"] == json::array({1, 4, 4}));
}

TEST_CASE("hstar command") {
    const auto h = ok({"hstar", input("hexagon.json")});
    CHECK(h["hstar"] == json::array({1, 4, 1}));
    CHECK(h["c"] == json::array({1, 1, 1}));
    CHECK_FALSE(h.contains("diagnostics"));
    CHECK(ok({"hstar", input("square_typeB.json"), "--method", "both"})["hstar"] == json::array({1, 6, 1}));
    CHECK(ok({"hstar", input("unit_cube3.json")})["hstar"] == json::array({1, 4, 1, 0}));
    CHECK(ok({"hstar", input("pkm_2_2_3.json"), "--method", "oracle"})["c"] == json::array({1, 0, 3}));
    fails({"hstar", input("flat.json")}, 1, "NotFullDimensional");
}

TEST_CASE("hstar diagnostics use 1-based index sets") {
    const auto d = ok({"hstar", input("hexagon.json"), "--diagnostics"})["diagnostics"];
    CHECK(d["bases"] == json::parse("[[1,2],[1,3],[2,3]]"));
    CHECK(d["internally_passive"] == json::parse("[[],[3],[2,3]]"));
    CHECK(d["box_table"]["[]"] == 1);
    CHECK(d["box_table"]["[1,2]"] == 0);
    CHECK(d["multiplicities"] == json::array({1, 1, 1}));
    CHECK(d["coloop_free"] == true);
}

TEST_CASE("custom box tables") {
    const auto h = ok({"hstar", input("hexagon_custom_table.json"), "--diagnostics"});
    // b([]) = 1, b([3]) = 2, b([1,2]) = 1/2 on top of zeros.
    CHECK(h["diagnostics"]["box_table"]["[3]"] == 2);
    CHECK(h["diagnostics"]["box_table"]["[1,2]"] == "1/2");
    CHECK(h["c"] == json::parse(R"([1, 3, "7/2"])"));
    fails({"hstar", input("hexagon_custom_table.json"), "--method", "both"}, 1, "UnsupportedMethod");
    const auto dependent = scratch_file("dep.json", R"({"generators": [[1,0],[2,0],[0,1]], "box_table": {"[1,2]": 1}})");
    fails({"hstar", dependent}, 1, "DependentSet");
    const auto out_of_range = scratch_file("oor.json", R"({"generators": [[1,0],[0,1]], "box_table": {"[3]": 1}})");
    fails({"hstar", out_of_range}, 1, "IndexOutOfRange");
}

TEST_CASE("check command") {
    auto v = ok({"check", "--hstar", "1,4,1"})["verdicts"];
    for (const auto& [name, entry] : v.items()) CHECK_MESSAGE(entry["value"] == true, name);
    CHECK(v["unimodal"]["peaks"] == json::array({1}));
    CHECK(v["cone"]["c"] == json::array({1, 1, 1}));

    v = ok({"check", "--hstar", "1,0,1", "--properties", "unimodal"})["verdicts"];
    CHECK(v.size() == 1);
    CHECK(v["unimodal"]["value"] == false);
    CHECK(v["unimodal"]["valley"] == 1);

    v = ok({"check", "--hstar", "1,7,0", "--properties", "cone,palindromic"})["verdicts"];
    CHECK(v["cone"]["value"] == true);
    CHECK(v["palindromic"]["value"] == false);
    CHECK(v["palindromic"]["mismatch"] == 0);

    v = ok({"check", "--hstar", "1,1", "--degree", "2", "--properties", "alt-inc"})["verdicts"];
    CHECK(v["alt-inc"]["value"] == false);
    CHECK(v["alt-inc"]["violation"]["greater"] == 0);

    v = ok({"check", input("hexagon_typeB.json"), "--properties", "alt-inc,real-rooted"})["verdicts"];
    CHECK(v["alt-inc"]["value"] == true);
    CHECK(v["real-rooted"]["value"] == true);

    fails({"check", "--hstar", "1,4,1", "--properties", "shiny"}, 1, "UnknownProperty");
    fails({"check", "--hstar", "0,0", "--properties", "real-rooted"}, 1, "ZeroPolynomial");
    fails({"check", "--hstar", "1,x"}, 1, "ParseError");
    fails({"check", "--hstar", "1,2,3", "--degree", "1"}, 1, "DegreeTooLarge");
}

TEST_CASE("eulerian command") {
    CHECK(ok({"eulerian", "--family", "A", "--d", "3", "--index", "2"})["coefficients"] == json::array({0, 2}));
    CHECK(ok({"eulerian", "--family", "A", "--d", "3", "--index", "2", "--method", "enumerate"})["coefficients"] ==
          json::array({0, 2}));
    CHECK(ok({"eulerian", "--family", "B", "--d", "2"})["coefficients"] == json::array({1, 6, 1}));
    CHECK(ok({"eulerian", "--family", "A", "--d", "1", "--index", "1"})["coefficients"] == json::array({1}));
    CHECK(ok({"eulerian", "--family", "A", "--d", "3"})["coefficients"] == json::array({1, 4, 1}));
    CHECK(ok({"eulerian", "--family", "B", "--d", "3", "--index", "1"})["coefficients"] == json::array({1, 6, 1}));
    CHECK(ok({"eulerian", "--family", "B", "--d", "3", "--index", "3", "--method", "enumerate"})["coefficients"] ==
          json::array({0, 4, 4}));
    fails({"eulerian", "--family", "A", "--d", "3", "--index", "4"}, 1, "IndexOutOfRange");
    fails({"eulerian", "--family", "A", "--d", "3", "--method", "identity"}, 1, "UnsupportedMethod");
    fails({"eulerian", "--family", "B", "--d", "3", "--method", "identity"}, 1, "UnsupportedMethod");
    fails({"eulerian", "--family", "A", "--d", "13", "--method", "enumerate"}, 2, "ResourceLimit");
    fails({"eulerian", "--family", "C", "--d", "3"}, 1, "UsageError");
}

TEST_CASE("matroid command") {
    auto m = ok({"matroid", input("hexagon.json")});
    CHECK(m["bases"] == json::parse("[[1,2],[1,3],[2,3]]"));
    CHECK(m["internally_passive"] == json::parse("[[],[3],[2,3]]"));
    CHECK(m["coloop_free"] == true);
    CHECK(m["independent_sets"].size() == 7);
    CHECK(ok({"matroid", input("unit_cube3.json")})["coloop_free"] == false);
    m = ok({"matroid", input("loop.json")});
    CHECK(m["rank"] == 0);
    CHECK(m["bases"] == json::parse("[[]]"));
    CHECK(m.contains("note"));
    m = ok({"matroid", input("hexagon.json"), "--reverse"});
    CHECK(m["request"]["order"] == "reversed");
    CHECK(m["bases"] == json::parse("[[2,3],[1,3],[1,2]]"));
    CHECK(m["internally_passive"] == json::parse("[[],[1],[1,2]]"));
}

TEST_CASE("input errors") {
    fails({"hstar", "/nonexistent/file.json"}, 1, "InputNotReadable");
    fails({"hstar", scratch_file("bad.json", "{not json")}, 1, "InvalidInput");
    fails({"hstar", scratch_file("ragged.json", R"({"generators": [[1,0],[1]]})")}, 1, "DimensionMismatch");
    fails({"hstar", scratch_file("mode.json", R"({"generators": [[1]], "mode": "typeC"})")}, 1, "InvalidInput");
    fails({"hstar", scratch_file("frac.json", R"({"generators": [[1.5]]})")}, 1, "InvalidInput");
    fails({}, 1, "UsageError");
    fails({"ehrhart"}, 1, "UsageError");
    const auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("hstar") != std::string::npos);
}

TEST_CASE("resource guard exits with 2") {
    const auto big = scratch_file("big.json", R"({"generators": [[1000,0,0],[0,1000,0],[0,0,1000]]})");
    const auto e = fails({"ehrhart", big, "--method", "oracle"}, 2, "ResourceLimit");
    CHECK(e["message"].get<std::string>().find("points") != std::string::npos);
}

TEST_CASE("large integers serialize as strings") {
    const auto f = scratch_file("huge.json", R"({"generators": [[1073741824,0],[0,1073741824]]})");
    const auto e = ok({"ehrhart", f})["ehrhart"];
    CHECK(e[0] == 1);
    CHECK(e[1] == 2147483648LL);
    CHECK(e[2] == "1152921504606846976");
    CHECK(reparse(e)[2] == zono::Rational(zono::Integer(1) << 60));
}

TEST_CASE("output is deterministic and re-parses exactly") {
    for (const auto& entry : fs::directory_iterator(kInputs)) {
        const auto path = entry.path().string();
        const auto first = run({"hstar", path, "--diagnostics"});
        const auto second = run({"hstar", path, "--diagnostics"});
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
        CHECK(first.exit_code == second.exit_code);
        if (first.exit_code != 0) continue;
        const auto doc = json::parse(first.out);
        const auto h = reparse(doc["hstar"]);
        CHECK(h.size() == doc["degree"].get<std::size_t>() + 1);
        CHECK(json::parse(json(doc).dump()) == doc);
    }
}

TEST_CASE("--method both never reports a disagreement on the shipped inputs") {
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(kInputs)) {
        const auto path = entry.path().string();
        for (const std::string command : {"ehrhart", "hstar"}) {
            const auto r = run({command, path, "--method", "both"});
            CHECK_MESSAGE(r.exit_code != 3, path);
            if (r.exit_code == 0) {
                CHECK(json::parse(r.out)["agree"] == true);
                ++compared;
            }
        }
    }
    CHECK(compared >= 15);
}
