#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "md/matrix.hpp"

using namespace md;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(v[i * c + j]);
    return m;
}

void check_snf(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    CHECK(d.U * d.S * d.V == m);
    Int du = d.U.det(), dv = d.V.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(d.U * d.Uinv == IntMatrix::identity(m.rows()));
    CHECK(d.V * d.Vinv == IntMatrix::identity(m.cols()));
    for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
        CHECK(d.invariant_factors[i] > 0);
        CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
    }
    // S is diagonal with exactly the invariant factors
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && i < d.invariant_factors.size())
                CHECK(d.S.at(i, j) == d.invariant_factors[i]);
            else
                CHECK(d.S.at(i, j) == 0);
        }
}

}  // namespace

TEST_CASE("determinant") {
    CHECK(mat(2, 2, {2, 4, 6, 8}).det() == -8);
    CHECK(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}).det() == 1);
    CHECK(mat(2, 2, {1, 2, 2, 4}).det() == 0);
}

TEST_CASE("smith normal form, fixed examples") {
    SmithDecomposition d = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
    REQUIRE(d.invariant_factors.size() == 2);
    CHECK(d.invariant_factors[0] == 2);
    CHECK(d.invariant_factors[1] == 4);
    check_snf(mat(2, 2, {2, 4, 6, 8}));

    d = smith_normal_form(mat(1, 3, {1, 3, 8}));
    REQUIRE(d.invariant_factors.size() == 1);
    CHECK(d.invariant_factors[0] == 1);

    d = smith_normal_form(mat(1, 2, {2, 2}));
    REQUIRE(d.invariant_factors.size() == 1);
    CHECK(d.invariant_factors[0] == 2);

    // the {1/13, 3/13, 4/13} lattice: {n : n1 + 3 n2 + 4 n3 = 0 mod 13}
    IntMatrix l = mat(3, 3, {13, 0, 0, -3, 1, 0, -4, 0, 1});
    d = smith_normal_form(l);
    REQUIRE(d.invariant_factors.size() == 3);
    CHECK(d.invariant_factors[0] == 1);
    CHECK(d.invariant_factors[1] == 1);
    CHECK(d.invariant_factors[2] == 13);
    check_snf(l);
}

TEST_CASE("smith normal form, 500 random matrices") {
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(entry(rng));
        check_snf(m);
    }
}

TEST_CASE("integer row span membership") {
    IntMatrix b = mat(1, 2, {1, 2});
    CHECK(in_integer_row_span(b, {2, 4}));
    CHECK(in_integer_row_span(b, {-3, -6}));
    CHECK(in_integer_row_span(b, {0, 0}));
    CHECK(!in_integer_row_span(b, {1, 1}));
    CHECK(!in_integer_row_span(b, {2, 3}));

    IntMatrix d = mat(2, 2, {2, 0, 0, 3});
    CHECK(in_integer_row_span(d, {4, 3}));
    CHECK(!in_integer_row_span(d, {1, 3}));
}

TEST_CASE("rational solve and row coordinates") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    std::vector<Rat> x = solve_rational(a, {Rat(5), Rat(11)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 2);

    bool ok = false;
    std::vector<Rat> c = rational_row_coordinates(mat(1, 2, {2, 4}), {1, 2}, ok);
    REQUIRE(ok);
    CHECK(c[0] == Rat(1, 2));
    rational_row_coordinates(mat(1, 2, {1, 0}), {0, 1}, ok);
    CHECK(!ok);
}

TEST_CASE("rank") {
    CHECK(mat(2, 2, {1, 2, 2, 4}).rank() == 1);
    CHECK(mat(2, 3, {1, 0, 0, 0, 1, 0}).rank() == 2);
    CHECK(mat(1, 1, {0}).rank() == 0);
}
