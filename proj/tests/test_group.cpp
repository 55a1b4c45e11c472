#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "md/group.hpp"
#include "md/periodic_set.hpp"

using namespace md;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(v[i * c + j]);
    return m;
}

std::vector<Int> ints(std::vector<long long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("rational circle problems") {
    DifferenceProblem p = problem_from_rational_circle({Rat(1, 13), Rat(3, 13), Rat(4, 13)});
    CHECK(p.group.describe() == "Z_13");
    REQUIRE(p.differences.size() == 3);
    CHECK(p.differences[0].torsion[0] == 1);
    CHECK(p.differences[1].torsion[0] == 3);
    CHECK(p.differences[2].torsion[0] == 4);

    p = problem_from_rational_circle({Rat(1, 2)});
    CHECK(p.group.describe() == "Z_2");
    CHECK(p.differences.size() == 1);
    CHECK(p.differences[0].torsion[0] == 1);

    p = problem_from_rational_circle({Rat(1, 2), Rat(1, 6)});
    CHECK(p.group.describe() == "Z_6");
    REQUIRE(p.differences.size() == 2);
    CHECK(p.differences[0].torsion[0] == 1);
    CHECK(p.differences[1].torsion[0] == 3);
    // quotient order equals the saturation index of the lattice
    CHECK(p.group.order() == saturation_index(p.group.lattice()));
}

TEST_CASE("integer vector problems") {
    DifferenceProblem p = problem_from_integer_vectors({ints({1}), ints({3}), ints({8})});
    CHECK(p.group.describe() == "Z");
    CHECK(p.group.lattice().rank() == 2);
    REQUIRE(p.differences.size() == 3);

    p = problem_from_integer_vectors({ints({1})});
    CHECK(p.group.describe() == "Z");
    CHECK(p.group.lattice().rank() == 0);

    // {2,4} generates 2Z; the kernel construction reduces it to {1,2}
    p = problem_from_integer_vectors({ints({2}), ints({4})});
    CHECK(p.group.describe() == "Z");
    std::vector<Int> hs;
    for (const GroupElement& d : p.differences) {
        Int h = d.free_part[0];
        hs.push_back(h < 0 ? Int(-h) : h);
    }
    std::sort(hs.begin(), hs.end());
    CHECK(hs == ints({1, 2}));
}

TEST_CASE("identity difference is an error") {
    CHECK_THROWS_AS(basis_images(QuotientGroup(Lattice(2, mat(1, 2, {1, 0})))),
                    IdentityDifference);
}

TEST_CASE("trivial lattice problem") {
    DifferenceProblem p = basis_images(QuotientGroup(Lattice::zero(2)));
    REQUIRE(p.differences.size() == 2);
    // representatives are the sign-min forms, so the negatives come out
    CHECK(p.differences[0].free_part == ints({-1, 0}));
    CHECK(p.differences[1].free_part == ints({0, -1}));
}

TEST_CASE("canonical/lift round trip differs by a lattice element") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9), dimd(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(dimd(rng));
        std::size_t rows = static_cast<std::size_t>(rng() % (r + 1));
        IntMatrix b(rows, r);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < r; ++j) b.at(i, j) = Int(entry(rng));
        // keep only independent rows
        std::vector<std::vector<Int>> keep;
        for (std::size_t i = 0; i < rows; ++i) {
            keep.push_back(b.row(i));
            if (IntMatrix::from_rows(keep).rank() != keep.size()) keep.pop_back();
        }
        Lattice l = keep.empty() ? Lattice::zero(r) : Lattice(r, IntMatrix::from_rows(keep));
        QuotientGroup g(l);
        std::vector<Int> x(r);
        for (std::size_t j = 0; j < r; ++j) x[j] = Int(entry(rng));
        std::vector<Int> back = g.lift(g.canonical(x));
        std::vector<Int> diff(r);
        for (std::size_t j = 0; j < r; ++j) diff[j] = x[j] - back[j];
        CHECK(l.contains(diff));
    }
}

TEST_CASE("folner boxes") {
    QuotientGroup z(Lattice::zero(1));
    CHECK(folner_box(z, 2).elements.size() == 5);

    QuotientGroup z13(Lattice(1, mat(1, 1, {13})));
    CHECK(folner_box(z13, 0).elements.size() == 13);
    CHECK(folner_box(z13, 4).elements.size() == 13);

    QuotientGroup z2z(Lattice(2, mat(1, 2, {2, 0})));
    CHECK(z2z.describe() == "Z_2 + Z");
    CHECK(folner_box(z2z, 1).elements.size() == 6);

    CHECK_THROWS_AS(folner_box(z, 10, 5), CapExceeded);
}

TEST_CASE("cayley graphs") {
    DifferenceProblem p = problem_from_rational_circle({Rat(1, 13), Rat(3, 13), Rat(4, 13)});
    CayleyGraph g = induced_cayley_graph(p, p.group.enumerate_torsion());
    REQUIRE(g.size() == 13);
    for (std::size_t v = 0; v < 13; ++v) {
        CHECK(g.degree(v) == 6);
        CHECK(g.adj[v][v] == 0);
        for (std::size_t u = 0; u < 13; ++u) CHECK(g.adj[v][u] == g.adj[u][v]);
    }
    CayleyGraph single = induced_cayley_graph(p, {p.group.zero()});
    CHECK(single.degree(0) == 0);
}

TEST_CASE("compact realization text") {
    std::string s = realize_as_compact_group(Lattice(2, mat(1, 2, {2, 2})));
    CHECK(s.find("Z_2") != std::string::npos);
    CHECK(s.find("T") != std::string::npos);
    std::string t = realize_as_compact_group(Lattice::zero(2));
    CHECK(t.find("beta_1") != std::string::npos);
}

TEST_CASE("period subgroup bookkeeping") {
    QuotientGroup g(Lattice::zero(2));  // Z^2
    GroupElement a;
    a.free_part = ints({1, 1});
    GroupElement b;
    b.free_part = ints({0, 3});
    PeriodSubgroup s(g, {a, b});
    CHECK(s.index() == 3);
    GroupElement c;
    c.free_part = ints({1, 4});
    CHECK(s.contains(g, c));
    c.free_part = ints({1, 0});
    CHECK(!s.contains(g, c));
    CHECK(s.cosets(g).size() == 3);

    GroupElement only_one;
    only_one.free_part = ints({1, 0});
    CHECK_THROWS(PeriodSubgroup(g, {only_one}));  // infinite index
}

TEST_CASE("tiling complement checker") {
    QuotientGroup z(Lattice::zero(1));
    GroupElement three;
    three.free_part = ints({3});
    PeriodicSet c3 = make_periodic_set(z, {three}, {z.zero()});
    GroupElement one = z.canonical(ints({1})), two = z.canonical(ints({2}));
    CHECK(check_tiling_complement({z.zero(), one, two}, c3));

    GroupElement six;
    six.free_part = ints({6});
    PeriodicSet gap = make_periodic_set(z, {six}, {z.canonical(ints({3}))});
    CHECK(!check_tiling_complement({z.zero(), one, two}, gap));

    GroupElement four;
    four.free_part = ints({4});
    PeriodicSet c01 = make_periodic_set(z, {four}, {z.zero(), one});
    CHECK(check_tiling_complement({z.zero(), two}, c01));
}
