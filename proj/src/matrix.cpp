#include "md/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace md {

std::string rat_pretty(const Rat& r) {
    std::ostringstream os;
    os << rat_str(r);
    double d = static_cast<double>(num(r)) / static_cast<double>(den(r));
    os << " (~" << std::fixed << std::setprecision(6) << d << ")";
    return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("entry count != rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dim mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

std::vector<Int> IntMatrix::apply_left(const std::vector<Int>& x) const {
    if (x.size() != rows_) throw std::invalid_argument("dim mismatch");
    std::vector<Int> y(cols_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * at(i, j);
    }
    return y;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::size_t IntMatrix::rank() const {
    if (empty()) return 0;
    return smith_normal_form(*this).rank();
}

namespace {

// Elementary operations maintaining  input = U * S * V,  Uinv = U^-1, Vinv = V^-1.
struct SnfState {
    IntMatrix S, U, V, Uinv, Vinv;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S.at(i, c), S.at(j, c));
        for (std::size_t c = 0; c < U.rows(); ++c) std::swap(U.at(c, i), U.at(c, j));
        for (std::size_t c = 0; c < Uinv.cols(); ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    }
    // row_i += q * row_j  on S
    void row_add(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) += q * S.at(j, c);
        for (std::size_t c = 0; c < U.rows(); ++c) U.at(c, j) -= q * U.at(c, i);
        for (std::size_t c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) += q * Uinv.at(j, c);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) = -S.at(i, c);
        for (std::size_t c = 0; c < U.rows(); ++c) U.at(c, i) = -U.at(c, i);
        for (std::size_t c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) = -Uinv.at(i, c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S.at(r, i), S.at(r, j));
        for (std::size_t c = 0; c < V.cols(); ++c) std::swap(V.at(i, c), V.at(j, c));
        for (std::size_t r = 0; r < Vinv.rows(); ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    }
    // col_i += q * col_j  on S
    void col_add(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, i) += q * S.at(r, j);
        for (std::size_t c = 0; c < V.cols(); ++c) V.at(j, c) -= q * V.at(i, c);
        for (std::size_t r = 0; r < Vinv.rows(); ++r) Vinv.at(r, i) += q * Vinv.at(r, j);
    }
    void col_negate(std::size_t i) {
        for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, i) = -S.at(r, i);
        for (std::size_t c = 0; c < V.cols(); ++c) V.at(i, c) = -V.at(i, c);
        for (std::size_t r = 0; r < Vinv.rows(); ++r) Vinv.at(r, i) = -Vinv.at(r, i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    const std::size_t nr = m.rows(), nc = m.cols();
    SnfState st{m, IntMatrix::identity(nr), IntMatrix::identity(nc),
                IntMatrix::identity(nr), IntMatrix::identity(nc)};

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot = smallest absolute nonzero entry in S[t.., t..], ties row-major
            std::size_t pi = nr, pj = nc;
            Int best(0);
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const Int& v = st.S.at(i, j);
                    if (v == 0) continue;
                    Int a = v < 0 ? Int(-v) : v;
                    if (pi == nr || a < best) { best = a; pi = i; pj = j; }
                }
            if (pi == nr) goto done;  // submatrix is zero
            if (pi != t) st.row_swap(t, pi);
            if (pj != t) st.col_swap(t, pj);
            if (st.S.at(t, t) < 0) st.row_negate(t);

            bool reduced = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (st.S.at(i, t) == 0) continue;
                Int q = floor_div(st.S.at(i, t), st.S.at(t, t));
                st.row_add(i, t, -q);
                if (st.S.at(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (st.S.at(t, j) == 0) continue;
                Int q = floor_div(st.S.at(t, j), st.S.at(t, t));
                st.col_add(j, t, -q);
                if (st.S.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;  // new smaller pivot appeared

            // divisibility fix-up: pivot must divide the rest of the submatrix
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (st.S.at(i, j) % st.S.at(t, t) != 0) {
                        st.row_add(t, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
    }
done:
    SmithDecomposition d;
    d.S = st.S;
    d.U = st.U;
    d.V = st.V;
    d.Uinv = st.Uinv;
    d.Vinv = st.Vinv;
    for (std::size_t t = 0; t < steps; ++t)
        if (st.S.at(t, t) != 0) d.invariant_factors.push_back(st.S.at(t, t));
    return d;
}

std::vector<Rat> solve_rational(RationalMatrix a, std::vector<Rat> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_rational: shape");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) throw std::invalid_argument("solve_rational: singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
    return x;
}

bool in_integer_row_span(const IntMatrix& basis, const std::vector<Int>& x) {
    if (basis.empty()) {
        for (const Int& v : x)
            if (v != 0) return false;
        return true;
    }
    if (x.size() != basis.cols()) throw std::invalid_argument("dim mismatch");
    SmithDecomposition d = smith_normal_form(basis);
    // x in Z-rowspan(U S V) iff y = x V^-1 has alpha_i | y_i and y_i = 0 past the rank
    std::vector<Int> y = d.Vinv.apply_left(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < d.rank()) {
            if (y[i] % d.invariant_factors[i] != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Rat> rational_row_coordinates(const IntMatrix& basis, const std::vector<Int>& x,
                                          bool& ok) {
    ok = false;
    if (basis.empty()) {
        for (const Int& v : x)
            if (v != 0) return {};
        ok = true;
        return {};
    }
    SmithDecomposition d = smith_normal_form(basis);
    std::vector<Int> y = d.Vinv.apply_left(x);  // x = (c U) S V  =>  x Vinv = (c U) S
    std::vector<Rat> cu(basis.rows(), Rat(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < d.rank()) {
            cu[i] = Rat(y[i], d.invariant_factors[i]);
        } else if (y[i] != 0) {
            return {};
        }
    }
    // c = cu * Uinv
    std::vector<Rat> c(basis.rows(), Rat(0));
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.rows(); ++j) c[j] += cu[i] * Rat(d.Uinv.at(i, j));
    ok = true;
    return c;
}

}  // namespace md
