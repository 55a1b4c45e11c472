#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "md/commands.hpp"

using namespace md;

namespace {

std::string temp_cache_dir(const char* tag) {
    auto p = std::filesystem::temp_directory_path() / (std::string("mdcache-test-") + tag);
    std::filesystem::remove_all(p);
    return p.string();
}

}  // namespace

TEST_CASE("problem file parsing") {
    ProblemFile pf = parse_problem(
        "# comment\n"
        "kind = rational-circle\n"
        "differences = 1/13, 3/13, 4/13\n"
        "max-folner = 2\n");
    CHECK(pf.kind == "rational-circle");
    REQUIRE(pf.fractions.size() == 3);
    CHECK(pf.fractions[1] == Rat(3, 13));
    CHECK(pf.max_folner == 2);

    pf = parse_problem("kind = integer-vectors\ndifferences = (1),(3),(8)\n");
    REQUIRE(pf.vectors.size() == 3);
    CHECK(pf.vectors[2] == std::vector<Int>{Int(8)});

    pf = parse_problem("kind = explicit-lattice\ndim = 2\nbasis = (1,2)\n");
    CHECK(pf.dim == 2);
    REQUIRE(pf.basis.size() == 1);

    pf = parse_problem(
        "kind = corank1-direct\nfactors = 2\ndifferences = (1|0),(0|1)\nstate-bits = 10\n");
    CHECK(pf.factors == std::vector<Int>{Int(2)});
    REQUIRE(pf.direct.size() == 2);
    CHECK(pf.direct[1].second == 1);
    CHECK(pf.state_bits == 10);
}

TEST_CASE("problem file rejections") {
    CHECK_THROWS_AS(parse_problem("kind = bogus\ndifferences = 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("differences = 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("kind = rational-circle\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("kind = rational-circle\ndifferences = 0/5\n"), ParseError);
    CHECK_THROWS_AS(
        build_problem(parse_problem("kind = integer-vectors\ndifferences = (0)\n")),
        IdentityDifference);
    CHECK_THROWS_AS(parse_problem("kind = rational-circle\nnonsense line\n"), ParseError);
    CHECK_THROWS_AS(
        build_problem(parse_problem("kind = explicit-lattice\ndim = 2\nbasis = (1,2,3)\n")),
        ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
}

TEST_CASE("isomorphic presentations share a fingerprint") {
    DifferenceProblem a = build_problem(
        parse_problem("kind = rational-circle\ndifferences = 1/13, 3/13, 4/13\n"));
    DifferenceProblem b = build_problem(parse_problem(
        "kind = explicit-lattice\ndim = 3\nbasis = (13,0,0),(-3,1,0),(-4,0,1)\n"));
    DifferenceProblem c = build_problem(
        parse_problem("kind = rational-circle\ndifferences = 4/13, 1/13, 3/13\n"));
    CHECK(problem_fingerprint(a) == problem_fingerprint(b));
    CHECK(problem_fingerprint(a) == problem_fingerprint(c));

    DifferenceProblem d = build_problem(
        parse_problem("kind = rational-circle\ndifferences = 1/13, 3/13\n"));
    CHECK(problem_fingerprint(a) != problem_fingerprint(d));
}

TEST_CASE("density command output is deterministic") {
    ProblemFile pf = parse_problem("kind = rational-circle\ndifferences = 1/13, 3/13, 4/13\n");
    CacheConfig off;
    off.enabled = false;
    CommandResult r1 = cmd_density(pf, off);
    CommandResult r2 = cmd_density(pf, off);
    CHECK(r1.body == r2.body);
    CHECK(r1.exact);
    CHECK(!r1.from_cache);
    CHECK(r1.body.find("status: EXACT") != std::string::npos);
    CHECK(r1.body.find("3/13") != std::string::npos);
    CHECK(r1.body.find("Z_13") != std::string::npos);
    CHECK(r1.body.find("witness") != std::string::npos);
}

TEST_CASE("density dispatch per problem shape") {
    CacheConfig off;
    off.enabled = false;
    CommandResult r =
        cmd_density(parse_problem("kind = explicit-lattice\ndim = 2\nbasis = (1,2)\n"), off);
    CHECK(r.exact);
    CHECK(r.body.find("1/3") != std::string::npos);
    CHECK(r.body.find("rank-1") != std::string::npos);

    r = cmd_density(parse_problem("kind = integer-vectors\ndifferences = (1),(3),(8)\n"), off);
    CHECK(r.exact);
    CHECK(r.body.find("4/11") != std::string::npos);

    r = cmd_density(parse_problem("kind = explicit-lattice\ndim = 2\nbasis = (1,1)\n"), off);
    CHECK(r.exact);
    CHECK(r.body.find("1/2") != std::string::npos);

    // free rank 2 with even-sum relations: the half-parity branch
    r = cmd_density(parse_problem(
                        "kind = explicit-lattice\ndim = 4\nbasis = (1,1,0,0),(0,0,1,1)\n"),
                    off);
    CHECK(r.exact);
    CHECK(r.body.find("1/2") != std::string::npos);
    CHECK(r.body.find("parity") != std::string::npos);
}

TEST_CASE("bounds command") {
    CacheConfig off;
    off.enabled = false;
    ProblemFile pf = parse_problem("kind = integer-vectors\ndifferences = (1),(3),(8)\n");
    pf.grid = 4096;
    CommandResult r = cmd_bounds(pf, off);
    CHECK(!r.exact);
    CHECK(r.body.find("kappa") != std::string::npos);
    CHECK(r.body.find("delsarte") != std::string::npos);
    CHECK(r.body.find("4/11") != std::string::npos);
}

TEST_CASE("construct command") {
    CacheConfig off;
    off.enabled = false;
    CommandResult r = cmd_construct(
        parse_problem("kind = rational-circle\ndifferences = 1/13, 3/13, 4/13\n"), off);
    CHECK(r.body.find("VERIFIED") != std::string::npos);
    CHECK(r.body.find("2/13") != std::string::npos);

    r = cmd_construct(parse_problem("kind = integer-vectors\ndifferences = (1),(3),(8)\n"), off);
    CHECK(r.body.find("VERIFIED") != std::string::npos);
}

TEST_CASE("certify command") {
    CommandResult r = cmd_certify(
        "support = 1,3,8\ncoefficients = 1553/6048, 209/252, 9/28\n");
    CHECK(r.exact);
    CHECK(r.body.find("NONNEGATIVE") != std::string::npos);
    CHECK(r.body.find("14561/6048") != std::string::npos);
    CHECK(r.body.find("6048/14561") != std::string::npos);

    r = cmd_certify("fejer = 3\n");
    CHECK(r.body.find("NONNEGATIVE") != std::string::npos);
    CHECK(r.body.find("1/4") != std::string::npos);

    r = cmd_certify("support = 1\ncoefficients = 2\n");
    CHECK(r.body.find("NEGATIVE") != std::string::npos);
    CHECK(r.body.find("witness") != std::string::npos);

    CHECK_THROWS_AS(cmd_certify("bogus = 1\n"), ParseError);
}

TEST_CASE("cache store and lookup") {
    CacheConfig cfg;
    cfg.dir = temp_cache_dir("roundtrip");
    CHECK(!cache_lookup(cfg, 42, "density", "opts"));
    cache_store(cfg, 42, "density", "opts", "line one\nline two\ttabbed\n");
    auto hit = cache_lookup(cfg, 42, "density", "opts");
    REQUIRE(hit);
    CHECK(*hit == "line one\nline two\ttabbed\n");
    // keyed by command and options too
    CHECK(!cache_lookup(cfg, 42, "bounds", "opts"));
    CHECK(!cache_lookup(cfg, 42, "density", "other"));
    CHECK(!cache_lookup(cfg, 43, "density", "opts"));
    // newest entry wins
    cache_store(cfg, 42, "density", "opts", "second body");
    CHECK(*cache_lookup(cfg, 42, "density", "opts") == "second body");
    std::filesystem::remove_all(cfg.dir);
}

TEST_CASE("cache skips corrupt lines") {
    CacheConfig cfg;
    cfg.dir = temp_cache_dir("corrupt");
    cache_store(cfg, 7, "density", "o", "good body");
    {
        std::ofstream out(cfg.dir + "/results.tsv", std::ios::app);
        out << "garbage without tabs\n";
        out << "7\tdensity\to\n";  // too few fields
    }
    auto hit = cache_lookup(cfg, 7, "density", "o");
    REQUIRE(hit);
    CHECK(*hit == "good body");
    std::filesystem::remove_all(cfg.dir);
}

TEST_CASE("commands hit the cache on the second run") {
    CacheConfig cfg;
    cfg.dir = temp_cache_dir("cmds");
    ProblemFile pf = parse_problem("kind = rational-circle\ndifferences = 1/13, 3/13, 4/13\n");
    CommandResult first = cmd_density(pf, cfg);
    CHECK(!first.from_cache);
    CommandResult second = cmd_density(pf, cfg);
    CHECK(second.from_cache);
    CHECK(second.body == first.body);
    CHECK(second.exact);
    // changing an option busts the cache
    ProblemFile pf2 = pf;
    pf2.max_folner = 1;
    CHECK(!cmd_density(pf2, cfg).from_cache);
    std::filesystem::remove_all(cfg.dir);
}
