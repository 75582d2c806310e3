#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "omr/fixtures.hpp"
#include "omr/json_io.hpp"
#include "omr/loday.hpp"
#include "omr/matrix.hpp"

using namespace omr;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// run the binary with stderr folded into stdout
RunResult run(const std::string& args) {
    std::string cmd = std::string(OMR_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fx(const std::string& name) {
    return std::string(OMR_FIXTURES_DIR) + "/" + name + ".json";
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate fixtures") {
    RunResult r = run("algebra validate " + fx("ax"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "algebra ax (dim 2)"));
    CHECK(contains(r.out, "PASS: commutative and associative"));
}

TEST_CASE("usage failures exit with 2") {
    CHECK(run("algebra validate /nonexistent.json").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);           // a subcommand is required
    CHECK(run("nat solve -A " + fx("ax")).code == 2);  // missing -B

    std::string bad = temp_path("omr_cli_bad.json");
    std::ofstream(bad) << "{\"name\": \"x\"}";
    CHECK(run("algebra validate " + bad).code == 2);
    std::ofstream(bad) << "not json at all";
    CHECK(run("algebra validate " + bad).code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("a defective table is a mathematical failure, not a usage error") {
    // commutative but non-associative: e1 e1 = e2, e2 e2 = e1, rest zero
    std::string bad = temp_path("omr_cli_nonassoc.json");
    std::ofstream(bad) << R"({
  "constants": [
    [["0", "1"], ["0", "0"]],
    [["0", "0"], ["1", "0"]]
  ],
  "dim": 2,
  "name": "nonassoc"
})";
    RunResult r = run("algebra validate " + bad);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "FAIL: not associative"));
    std::remove(bad.c_str());
}

TEST_CASE("functor matrix printing") {
    RunResult r = run("loday map -A " + fx("ax") + " -h 1,1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "surjection: 1,1 (2 -> 1)"));
    CHECK(contains(r.out, "1 0 0 1"));
    CHECK(contains(r.out, "0 1 1 0"));

    CHECK(run("loday map -A " + fx("ax") + " -h 1,3").code == 2);  // not surjective
}

TEST_CASE("functor law sweep") {
    RunResult r = run("loday check -A " + fx("by") + " --max-domain 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS: functor laws hold on 105 composable pairs"));
}

TEST_CASE("solving and verifying a morphism space") {
    RunResult r = run("nat solve -A " + fx("idem1") + " -B " + fx("nil1") + " -N 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pair: idem1 -> nil1, truncation N = 3"));
    CHECK(contains(r.out, "dimension: 2"));
    CHECK(contains(r.out, "-- basis vector 1 --"));
    CHECK(contains(r.out, "-- basis vector 2 --"));

    // verify a natural morphism written by the library
    std::string good = temp_path("omr_cli_good_morphism.json");
    RatMat u(2, 2);
    u(0, 0) = Rat(1);
    u(1, 1) = Rat(1);
    write_morphism_file(induced_morphism(u, 3), good);
    RunResult v = run("nat verify -A " + fx("ax") + " -B " + fx("ax") + " -s " + good);
    CHECK(v.code == 0);
    CHECK(contains(v.out, "PASS: natural up to level 3"));
    std::remove(good.c_str());

    // a non-multiplicative scaling fails with a witness line and exit 1
    std::string badm = temp_path("omr_cli_bad_morphism.json");
    RatMat two(1, 1);
    two(0, 0) = Rat(2);
    write_morphism_file(induced_morphism(two, 2), badm);
    RunResult f = run("nat verify -A " + fx("idem1") + " -B " + fx("idem1") + " -s " + badm);
    CHECK(f.code == 1);
    CHECK(contains(f.out, "FAIL: merge discrepancy r_0 is nonzero"));
    // mismatched dimensions are a usage error instead
    CHECK(run("nat verify -A " + fx("ax") + " -B " + fx("ax") + " -s " + badm).code == 2);
    std::remove(badm.c_str());
}

TEST_CASE("counterexample construction round-trips through verification") {
    std::string out_file = temp_path("omr_cli_counterexample.json");
    RunResult r = run("nat counterexample -N 4 -o " + out_file);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS: natural at all 92 surjection squares (1 <= n <= m <= 4)"));
    CHECK(contains(r.out, "wrote " + out_file));

    TruncatedMorphism s = read_morphism_file(out_file);
    CHECK(s.level_bound == 4);

    RunResult v = run("nat verify -A " + fx("ax") + " -B " + fx("by") + " -s " + out_file);
    CHECK(v.code == 0);

    RunResult d = run("det identity -A " + fx("ax") + " -B " + fx("by") + " -s " + out_file +
                      " -r 2");
    CHECK(d.code == 0);
    CHECK(contains(d.out, "functional value on det^2: -1"));
    CHECK(contains(d.out, "PASS: s_4(E^(x)2) = value * F^(x)2"));
    std::remove(out_file.c_str());
}

TEST_CASE("ideal printing and point enumeration") {
    RunResult g = run("ideal groebner -A " + fx("nil1") + " -B " + fx("idem1"));
    CHECK(g.code == 0);
    CHECK(contains(g.out, "reduced Groebner basis (grevlex):"));
    CHECK(contains(g.out, "1 * l[1][1]^2"));

    RunResult z = run("ideal groebner -A " + fx("nil1") + " -B " + fx("nil1"));
    CHECK(z.code == 0);
    CHECK(contains(z.out, "(zero ideal)"));

    RunResult p = run("ideal points -A " + fx("idem1") + " -B " + fx("idem1") + " -p 5");
    CHECK(p.code == 0);
    CHECK(contains(p.out, "[[0]] det=0"));
    CHECK(contains(p.out, "[[1]] det=1"));

    CHECK(run("ideal points -A " + fx("idem1") + " -B " + fx("idem1") + " -p 33").code == 2);
}

TEST_CASE("theorem runs are reproducible byte for byte") {
    std::string args = "theorem -A " + fx("nil1") + " -B " + fx("idem1") + " --primes 3,5,7";
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(contains(r1.out, "no invertible homomorphism"));
    CHECK(contains(r1.out, "\"min_power\": 2"));

    RunResult open_case = run("theorem -A " + fx("ax") + " -B " + fx("by") + " --primes 5");
    CHECK(open_case.code == 0);
    CHECK(contains(open_case.out, "invertible homomorphism may exist"));
}
