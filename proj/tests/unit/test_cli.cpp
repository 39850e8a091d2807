#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "dring/commands.hpp"
#include "dring/expr_parser.hpp"
#include "dring/problem.hpp"
#include "support/oracles.hpp"

using namespace dring;
using nlohmann::json;

namespace {

const char* kExample = "vars: x, y, z\nideal: []\nD: [y, x*z, 0]\nprime: point(2, 3, 5)\n";

std::string write_temp(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "dring_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

CliOutcome cli(std::vector<std::string> args) { return run_cli(args); }

json run_ok(const std::string& problem, std::vector<std::string> args, const std::string& name = "p.txt") {
    args.push_back("--input");
    args.push_back(write_temp(name, problem));
    auto out = cli(args);
    REQUIRE_MESSAGE(out.exit_code == kExitOk, out.output);
    return json::parse(out.output);
}

void check_error_line(const CliOutcome& out, int code) {
    CHECK(out.exit_code == code);
    REQUIRE_FALSE(out.output.empty());
    CHECK(out.output.find('\n') >= out.output.size() - 1);
    json j = json::parse(out.output);
    CHECK(j["error"]["exit_code"] == code);
    CHECK(j["error"]["message"].is_string());
}

}  // namespace

TEST_CASE("parse_problem examples") {
    ProblemFile p = parse_problem(kExample);
    CHECK(p.vars() == std::vector<std::string>{"x", "y", "z"});
    CHECK(p.ideal.empty());
    CHECK(p.derivation[1] == parse_polynomial("x*z", p.ring));
    REQUIRE(p.prime.has_value());
    CHECK(p.prime->str(*p.ring) == "point(2, 3, 5)");

    ProblemFile q = parse_problem("vars: x\nideal: []\nD: [1]\nprime: point(0)");
    CHECK(q.derivation[0] == Poly::constant(q.ring, Rational(1)));
    CHECK(q.prime->values()[0] == Rational(0));

    CHECK_THROWS_AS(parse_problem("vars: x, y, z\nideal: []\nD: [y, x*z]\nprime: point(0, 0, 0)"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        (void)parse_problem("vars: x, y\nD: [x + , 1]\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
        CHECK(std::string(e.what()).rfind("2:", 0) == 0);
    }
    CHECK_THROWS_AS(parse_problem("vars: x\nD: [q]\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars: x\nD: [1]\nD: [1]\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars: x\nD: [1]\ncolor: red\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars: x, y\nD: [1, 0]\nprime: coord(z=0)\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars: x\nD: [1/x]\n"), ParseError);
}

TEST_CASE("problem files support comments, multi-line lists and quotient ideals") {
    ProblemFile p = parse_problem(
        "# nilpotent example\n"
        "vars: x, y   # two variables\n"
        "ideal: [\n  y^2\n]\n"
        "D: [1,\n    0]\n"
        "prime: coord(y=0)\n");
    CHECK(p.quotient().has_value());
    CHECK_FALSE(p.prime->is_point());
    CHECK(p.prime->str(*p.ring) == "coord(y=0)");
}

TEST_CASE("property: render and parse round trip") {
    std::mt19937 rng(79);
    RingPtr r = make_ring({"a", "b", "c"});
    for (int trial = 0; trial < 30; ++trial) {
        ProblemFile p;
        p.ring = r;
        for (int i = 0; i < 3; ++i) p.derivation.push_back(oracle::random_poly(rng, r, 3, 4));
        std::vector<Poly> gens;
        for (int i = 0; i < static_cast<int>(rng() % 3); ++i) gens.push_back(oracle::random_poly(rng, r, 2, 3));
        p.ideal = gens;
        if (trial % 3 == 0) {
            p.prime = PrimeSpec::point({oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)});
        } else if (trial % 3 == 1) {
            p.prime = PrimeSpec::coordinate({oracle::random_rational(rng), std::nullopt, Rational(0)});
        }
        std::string text = render_problem(p);
        ProblemFile back = parse_problem(text);
        CHECK(back == p);
        CHECK(render_problem(back) == text);
    }
}

TEST_CASE("solve command reproduces the golden coefficients") {
    json j = run_ok(kExample, {"solve", "--order", "4"});
    CHECK(j["command"] == "solve");
    CHECK(j["result"]["solution"]["coords"]["x"] == json({"2", "3", "5", "5/2", "25/12"}));
    CHECK(j["result"]["agreement"] == true);
    CHECK(j["result"]["verified"] == true);
    CHECK(j["result"]["trivial"] == false);
    CHECK_FALSE(j.contains("timing_ms"));
    json t = run_ok(kExample, {"solve", "--order", "2", "--timing"});
    CHECK(t.contains("timing_ms"));
}

TEST_CASE("simplicity command certifies the linear example") {
    json j = run_ok("vars: x, y, z\nD: [1, 1, 1]\nprime: point(0, 0, 0)\n", {"simplicity", "--deg", "1", "--order", "3"});
    const json& v = j["result"]["verdict"];
    CHECK(v["kind"] == "not_simple");
    CHECK(v["witness"] == json({"x - z", "y - z"}));
    CHECK(v["checks"]["d_stable"] == true);
    CHECK(v["checks"]["inside_prime"] == true);
    CHECK(v["checks"]["nonzero"] == true);

    json n = run_ok("vars: x, y\nD: [1, y]\nprime: point(0, 1)\n", {"simplicity", "--deg", "3", "--order", "12"});
    CHECK(n["result"]["verdict"]["kind"] == "no_obstruction_up_to");
    CHECK(n["result"]["verdict"]["simplicity_asserted"] == false);

    json ln = run_ok("vars: x\nD: [1]\nprime: point(0)\n", {"simplicity", "--ln"});
    const json& l = ln["result"]["locally_nilpotent"];
    CHECK(l["heuristic"] == true);
    CHECK(l["generator_ell"] == 2);
    CHECK(l["criterion_holds"] == true);
    CHECK(l["probe_violations"] == json({"x^2"}));
}

TEST_CASE("stable, kernel, nilpotent and exp commands") {
    json s = run_ok("vars: x, y, z\nD: [y, x*z, 0]\nprime: coord(x=0, y=0)\n", {"stable"});
    CHECK(s["result"]["prime_stable"] == true);
    CHECK(s["result"]["ideal_stable"] == true);
    CHECK(s["result"]["trivial"] == true);

    json k = run_ok("vars: x, y, z\nD: [1, 1, 1]\nprime: point(0, 0, 0)\n", {"kernel", "--deg", "1", "--order", "3"});
    CHECK(k["result"]["dimension"] == 2);

    json n = run_ok("vars: x, y\nD: [1, x]\n", {"nilpotent", "--bound", "5"});
    CHECK(n["result"]["nilpotent"] == true);

    json e = run_ok(kExample, {"exp", "--elem", "x", "--order", "3"});
    CHECK(e["result"]["coefficients"] == json({"x", "y", "1/2*x*z", "1/6*y*z"}));
}

TEST_CASE("verify command accepts a solve report") {
    auto sol = cli({"solve", "--order", "6", "--input", write_temp("ex.txt", kExample)});
    REQUIRE(sol.exit_code == kExitOk);
    std::string sol_path = write_temp("sol.json", sol.output);
    auto v = cli({"verify", "--order", "5", "--input", write_temp("ex.txt", kExample), "--solution", sol_path});
    REQUIRE(v.exit_code == kExitOk);
    CHECK(json::parse(v.output)["result"]["verified"] == true);

    json broken = json::parse(sol.output);
    broken["result"]["solution"]["coords"]["x"][2] = "6";
    auto b = cli({"verify", "--order", "5", "--input", write_temp("ex.txt", kExample), "--solution",
                  write_temp("bad.json", broken.dump())});
    REQUIRE(b.exit_code == kExitOk);
    CHECK(json::parse(b.output)["result"]["verified"] == false);
}

TEST_CASE("reports are byte-deterministic") {
    std::string path = write_temp("det.txt", kExample);
    for (const char* cmd : {"solve", "simplicity", "kernel"}) {
        auto a = cli({cmd, "--input", path, "--deg", "2", "--order", "5"});
        auto b = cli({cmd, "--input", path, "--deg", "2", "--order", "5"});
        CHECK(a.exit_code == kExitOk);
        CHECK(a.output == b.output);
    }
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));
    CHECK(input_digest("").rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("error paths map to exit codes with a one-line JSON error") {
    check_error_line(cli({"solve", "--input", "/nonexistent/problem.txt"}), kExitInputError);
    check_error_line(cli({"solve", "--input", write_temp("bad.txt", "vars: x\nD: [x +]\n")}), kExitInputError);
    check_error_line(cli({"frobnicate", "--input", write_temp("ok.txt", kExample)}), kExitInputError);
    check_error_line(cli({"solve"}), kExitInputError);
    check_error_line(cli({"solve", "--input", write_temp("np.txt", "vars: x\nD: [1]\n")}), kExitInputError);
    check_error_line(cli({"exp", "--input", write_temp("ok.txt", kExample)}), kExitInputError);
    check_error_line(cli({"solve", "--input", write_temp("off.txt", "vars: x, y\nideal: [y]\nD: [1, 0]\nprime: point(0, 1)\n")}),
                     kExitInputError);
    // unstable quotient
    check_error_line(cli({"solve", "--input", write_temp("uq.txt", "vars: x, y\nideal: [y]\nD: [0, 1]\nprime: point(0, 0)\n")}),
                     kExitInputError);
}

TEST_CASE("a saturation cap hit downgrades the verdict with a warning") {
    json j = run_ok("vars: x, y\nD: [1, x]\nprime: point(0, 0)\n", {"simplicity", "--cap", "0", "--deg", "2", "--order", "8"});
    CHECK(j["result"]["verdict"]["kind"] == "no_obstruction_up_to");
    CHECK_FALSE(j["warnings"].empty());
}
