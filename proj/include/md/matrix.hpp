#pragma once

#include <cstddef>
#include <vector>

#include "md/rational.hpp"

namespace md {

// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    // row vector * matrix
    std::vector<Int> apply_left(const std::vector<Int>& x) const;

    // exact determinant (Bareiss fraction-free elimination); square only
    Int det() const;

    // rank over Q
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// L = U * S * V with U, V unimodular, S = diag(invariant factors) padded with
// zeros, alpha_i | alpha_{i+1}, all factors positive. Uinv/Vinv carried so
// callers can change coordinates without re-inverting.
struct SmithDecomposition {
    IntMatrix U, S, V;
    IntMatrix Uinv, Vinv;
    std::vector<Int> invariant_factors;  // positive diagonal entries only
    std::size_t rank() const { return invariant_factors.size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Solve A x = b over Q by Gaussian elimination. A square nonsingular.
std::vector<Rat> solve_rational(RationalMatrix a, std::vector<Rat> b);

// Is x in the integer row span of basis? (exact, via SNF)
bool in_integer_row_span(const IntMatrix& basis, const std::vector<Int>& x);

// Rational coordinates c with x = c * basis, if x lies in the rational row
// span; empty optional otherwise. basis rows need not be independent as long
// as a solution exists.
std::vector<Rat> rational_row_coordinates(const IntMatrix& basis, const std::vector<Int>& x,
                                          bool& ok);

}  // namespace md
