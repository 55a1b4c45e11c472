#include "md/lattice.hpp"

namespace md {

Lattice::Lattice(std::size_t ambient_dim, IntMatrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.rows() == 0) {
        basis_ = IntMatrix(0, ambient_);
        return;
    }
    if (basis_.cols() != ambient_) throw std::invalid_argument("basis width != ambient dim");
    if (basis_.rows() > ambient_) throw std::invalid_argument("more basis rows than ambient dim");
    if (basis_.rank() != basis_.rows()) throw std::invalid_argument("basis rows linearly dependent");
}

bool Lattice::same_lattice(const Lattice& o) const {
    if (ambient_ != o.ambient_ || rank() != o.rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (!o.contains(basis_.row(i))) return false;
    for (std::size_t i = 0; i < o.rank(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

std::size_t lattice_rank(const Lattice& l) { return l.rank(); }

bool is_primitive_set(const Lattice& l) {
    if (l.rank() == 0) return true;
    for (const Int& a : smith_normal_form(l.basis()).invariant_factors)
        if (a != 1) return false;
    return true;
}

Lattice primitive_basis_of_span(const Lattice& l) {
    if (l.rank() == 0) return l;
    SmithDecomposition d = smith_normal_form(l.basis());
    // saturation basis: replace the invariant factors by 1, i.e. take the
    // first rank rows of V
    IntMatrix b(d.rank(), l.ambient_dim());
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) b.at(i, j) = d.V.at(i, j);
    return Lattice(l.ambient_dim(), b);
}

Lattice kernel_lattice(const IntMatrix& b) {
    const std::size_t r = b.cols();
    SmithDecomposition d = smith_normal_form(b);
    // b n = 0  <=>  S (V n) = 0; kernel basis = columns of Vinv past the rank
    const std::size_t corank = r - d.rank();
    IntMatrix basis(corank, r);
    for (std::size_t i = 0; i < corank; ++i)
        for (std::size_t j = 0; j < r; ++j) basis.at(i, j) = d.Vinv.at(j, d.rank() + i);
    return Lattice(r, basis);
}

RationalMatrix dual_lattice_basis(const Lattice& l) {
    const std::size_t d = l.rank(), r = l.ambient_dim();
    if (d == 0) throw std::invalid_argument("dual_lattice_basis: rank 0");
    const IntMatrix& b = l.basis();
    // Gram = B B^T, dual = Gram^-1 B: rows lie in span(B) and pair to identity
    RationalMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Int s(0);
            for (std::size_t k = 0; k < r; ++k) s += b.at(i, k) * b.at(j, k);
            gram.at(i, j) = Rat(s);
        }
    RationalMatrix dual(d, r);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rat> e(d, Rat(0));
        e[i] = 1;
        std::vector<Rat> row = solve_rational(gram, e);  // i-th row of Gram^-1
        for (std::size_t k = 0; k < r; ++k) {
            Rat v(0);
            for (std::size_t j = 0; j < d; ++j) v += row[j] * Rat(b.at(j, k));
            dual.at(i, k) = v;
        }
    }
    return dual;
}

Int saturation_index(const Lattice& l) {
    if (l.rank() == 0) return 1;
    Int p(1);
    for (const Int& a : smith_normal_form(l.basis()).invariant_factors) p *= a;
    return p;
}

}  // namespace md
