#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "srlab/errors.hpp"
#include "srlab/io.hpp"

using namespace srlab;

namespace {

const std::string kData = SRLAB_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected = 0) {
    args.push_back("--format");
    args.push_back("structured");
    const auto r = run(args);
    CHECK(r.code == expected);
    return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "srlab_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_facets(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::string csv(const Json& a) {
    std::string s;
    for (const auto& x : a) s += (s.empty() ? "" : ",") + x.dump();
    return s;
}

}  // namespace

TEST_CASE("facet-list parsing") {
    std::istringstream in("# a triangle boundary\n1 2\n\n2 3   # edge\n1\t3\n");
    const auto c = parse_facets(in);
    CHECK(c == boundary_simplex(2));
    CHECK(format_facets(c) == "1 2\n1 3\n2 3\n");
    std::istringstream again(format_facets(kuehnel_torus()));
    CHECK(parse_facets(again) == kuehnel_torus());
    CHECK(parse_error_line("1 2 3\n1 2 x\n") == 2);
    CHECK(parse_error_line("1 2\n\n# c\n0 1\n") == 4);
    CHECK(parse_error_line("1 2 2\n") == 1);
    CHECK(parse_error_line("1 2\n3 -4\n") == 2);
    CHECK(parse_error_line("1 2 3\n") == -1);
}

TEST_CASE("JSON complexes") {
    const auto j = complex_to_json(cross_polytope_boundary(3));
    CHECK(j["facets"].size() == 8);
    CHECK(complex_from_json(j) == cross_polytope_boundary(3));
    CHECK(complex_from_json(Json::parse(R"({"facets": [[3,1,2],[4]]})")) == SimplicialComplex({{1, 2, 3}, {4}}));
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facet": []})")), Error);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[1,"a"]]})")), Error);
    const auto path = temp_file("torus.json", complex_to_json(kuehnel_torus()).dump());
    CHECK(read_complex(path) == kuehnel_torus());
    CHECK_THROWS_AS(read_complex("/nonexistent/file"), Error);
}

TEST_CASE("fan files") {
    const auto p2 = read_fan(data("cp2.fan"));
    CHECK(p2.dimension == 2);
    CHECK(p2.rays.size() == 3);
    CHECK(p2.cones.size() == 3);
    CHECK(fan_from_json(fan_to_json(p2)).rays == p2.rays);
    CHECK(fan_from_json(fan_to_json(p2)).cones == p2.cones);
    std::istringstream bad("2\n1 0\n0 1 5\ncones\n1 2\n");
    CHECK_THROWS_AS(parse_fan(bad), Error);
    std::istringstream no_sep("2\n1 0\n0 1\n");
    CHECK_THROWS_AS(parse_fan(no_sep), Error);
}

TEST_CASE("certificate JSON round trip") {
    const auto walk = random_pachner_walk(boundary_simplex(4), 6, 1);
    const auto& sphere = walk.back().complex;
    const auto fp = find_wle(sphere, PrimeField{}, 13);
    const auto j = certificate_to_json(fp);
    CHECK(j["seed"] == "13");
    CHECK(j["prime"] == "2305843009213693951");
    const auto back = certificate_from_json(j, PrimeField{});
    CHECK(back.theta == fp.theta);
    CHECK(back.omega == fp.omega);
    CHECK(back.tries == fp.tries);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(check_wle(sphere, LinearSystem<Fp>{back.theta, back.omega}, PrimeField{}).passed());

    const auto q = find_wle(cross_polytope_boundary(3), RationalField{}, 2);
    const auto jq = certificate_to_json(q);
    CHECK(jq["prime"].is_null());
    const auto qb = certificate_from_json(jq, RationalField{});
    CHECK(qb.theta == q.theta);
    CHECK(certificate_to_json(qb).dump() == jq.dump());
    CHECK_THROWS_AS(certificate_from_json(j, RationalField{}), Error);
}

TEST_CASE("cli: vectors") {
    const auto b = data("boundary_tetrahedron.txt");
    CHECK(run({"fvector", b}).out == "f=4,6,4\n");
    CHECK(run({"hvector", b}).out == "h=1,1,1,1\n");
    const auto g = run({"gcheck", b});
    CHECK(g.code == 0);
    CHECK(g.out.rfind("f=4,6,4 h=1,1,1,1 g=1,0\n", 0) == 0);
    const auto t = run({"gcheck", data("torus.txt")});
    CHECK(t.out.find("dehn_sommerville=no") != std::string::npos);
    const auto j = run_json({"gcheck", data("torus.txt")});
    CHECK(j["schema_version"] == cli::kSchemaVersion);
    CHECK(j["conditions"]["dehn_sommerville"] == false);
    CHECK(csv(j["h"]) == "1,4,10,-1");
    CHECK(t.out.find("h=" + csv(j["h"])) != std::string::npos);
}

TEST_CASE("cli: errors") {
    const auto bad = run({"fvector", data("malformed.txt")});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("line 2") != std::string::npos);
    const auto j = run_json({"fvector", data("malformed.txt")}, cli::kInputError);
    CHECK(j["error"]["code"] == "ParseError");
    CHECK(j["error"]["line"] == 2);
    CHECK(run({"fvector"}).code == cli::kInputError);
    CHECK(run({"frobnicate", "x"}).code == cli::kInputError);
    CHECK(run({"classify", data("torus.txt"), "--field", "fp:12"}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli: classify") {
    const auto s = run_json({"classify", data("boundary_tetrahedron.txt")});
    for (const char* k : {"homology_manifold", "homology_sphere", "cohen_macaulay", "gorenstein_star", "buchsbaum", "orientable"})
        CHECK(s[k] == true);
    const auto t = run_json({"classify", data("torus.txt")});
    CHECK(t["homology_manifold"] == true);
    CHECK(t["buchsbaum"] == true);
    CHECK(t["orientable"] == true);
    CHECK(t["cohen_macaulay"] == false);
    const auto np = temp_file("nonpure.txt", "1 2 3\n3 4\n");
    CHECK(run_json({"classify", np})["buchsbaum"] == false);
    const auto rp = run_json({"classify", data("rp2.txt"), "--field", "fp:2"});
    CHECK(rp["orientable"] == true);
    CHECK(rp["field"] == "fp:2");
}

TEST_CASE("cli: wlp") {
    const auto walk = random_pachner_walk(boundary_simplex(4), 10, 4);
    const auto sphere = temp_file("sphere.txt", format_facets(walk.back().complex));
    const auto j = run_json({"wlp", sphere, "--seed", "99"});
    CHECK(j["seed"] == 99);
    CHECK(j["certificate"]["seed"] == "99");
    CHECK(j["certificate"]["passed"] == true);
    const auto human = run({"wlp", sphere, "--seed", "99"});
    CHECK(human.out.find("seed 99") != std::string::npos);
    const auto c = run_json({"wlp", data("octahedron.txt"), "--certify"});
    CHECK(c["certificate"]["certified_over_q"] == true);
    CHECK(run({"wlp", sphere, "--max-tries", "0"}).code == cli::kSearchExhausted);
    CHECK(run({"wlp", data("torus.txt")}).code == cli::kInputError);
    const auto q = run_json({"wlp", data("octahedron.txt"), "--field", "q"});
    CHECK(q["field"] == "q");
}

TEST_CASE("cli: walk") {
    const auto dir = (std::filesystem::temp_directory_path() / "srlab_tests" / "walk_out").string();
    std::filesystem::remove_all(dir);
    const auto s3 = temp_file("s3.txt", format_facets(boundary_simplex(4)));
    const auto j = run_json({"walk", s3, "--steps", "50", "--seed", "5", "--out", dir});
    CHECK(j["complexes"] == 51);
    CHECK(j["g_law_holds"] == true);
    CHECK(j["g_nonnegative"] == true);
    CHECK(j["move_count_inequality"] == true);
    CHECK(j["all_homology_spheres"] == true);
    CHECK(j["final_g"] == j["final_g_ledger"]);
    CHECK(j["log"].back()["g"] == j["final_g"]);
    CHECK(std::filesystem::exists(dir + "/walk.json"));
    const auto last = read_complex(dir + "/step_050.txt");
    CHECK(csv(j["log"].back()["f"]) == to_string(f_vector(last)));
    CHECK(to_string(g_vector(h_vector(last))) == csv(j["final_g"]));

    const auto zero = run_json({"walk", data("octahedron.txt"), "--steps", "0"});
    CHECK(zero["complexes"] == 1);
    CHECK(csv(zero["log"][0]["f"]) == "6,12,8");
    const auto torus = run_json({"walk", data("torus.txt"), "--steps", "10", "--seed", "2"});
    CHECK(torus["g_law_holds"] == true);
    CHECK(torus.find("all_homology_spheres") == torus.end());
    CHECK(run({"walk", temp_file("np.txt", "1 2 3\n3 4\n"), "--steps", "2"}).code == cli::kInputError);
}

TEST_CASE("cli: manifold-g") {
    const auto t = run_json({"manifold-g", data("torus.txt")});
    CHECK(csv(t["g_doubleprime"]) == "1,3");
    CHECK(t["g_doubleprime_is_m"] == true);
    CHECK(t["socle"][2] == 6);
    CHECK(csv(t["h_prime"]) == csv(t["h_prime_formula"]));
    const auto s = run_json({"manifold-g", data("octahedron.txt")});
    CHECK(s["h_doubleprime"] == s["h"]);
    CHECK(run({"manifold-g", temp_file("np2.txt", "1 2 3\n3 4\n")}).code == cli::kInputError);
    const auto rp = run_json({"manifold-g", data("rp2.txt")});
    CHECK(rp["socle"].is_null());
}

TEST_CASE("cli: toric") {
    const auto p = run_json({"toric", data("cp2.fan")});
    CHECK(csv(p["betti_even"]) == "1,1,1");
    CHECK(p["wle"]["found"] == true);
    const auto q = run_json({"toric", data("cp1xcp1.fan")});
    CHECK(csv(q["betti_even"]) == "1,2,1");
    CHECK(csv(q["differences"]) == "1,1");
    const auto bad = run({"toric", data("incomplete.fan")});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("InvalidFan") != std::string::npos);
}

TEST_CASE("cli: reduce, hilbert, socle") {
    const auto r = run_json({"reduce", data("octahedron.txt"), "--seed", "3"});
    CHECK(csv(r["dims"]) == "1,3,3,1");
    CHECK(r["basis"][1].size() == 3);
    const auto h = run_json({"hilbert", data("boundary_tetrahedron.txt"), "--degree", "4"});
    CHECK(csv(h["hilbert_function"]) == "1,4,10,20,34");
    CHECK(h["series_agrees"] == true);
    const auto s = run_json({"socle", data("torus.txt")});
    CHECK(csv(s["socle"]) == "0,0,6,1");
    CHECK(run_json({"socle", data("boundary_tetrahedron.txt"), "--field", "fp:101"})["field"] == "fp:101");
}

TEST_CASE("cli: structured output is deterministic") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"wlp", data("octahedron.txt"), "--seed", "7", "--format", "structured"},
             {"walk", data("boundary_tetrahedron.txt"), "--steps", "15", "--seed", "3", "--format", "structured"},
             {"manifold-g", data("torus.txt"), "--seed", "4", "--format", "structured"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
