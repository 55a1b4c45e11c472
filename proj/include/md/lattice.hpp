#pragma once

#include <vector>

#include "md/matrix.hpp"

namespace md {

// Sublattice of Z^r given by a basis of linearly independent rows. The rank-0
// lattice {0} (empty basis) is a valid value.
class Lattice {
public:
    // basis rows must be linearly independent over Q; throws otherwise
    Lattice(std::size_t ambient_dim, IntMatrix basis);
    static Lattice zero(std::size_t ambient_dim) { return Lattice(ambient_dim, IntMatrix(0, ambient_dim)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Int>& x) const { return in_integer_row_span(basis_, x); }

    // equality as subgroups of Z^r (mutual basis membership)
    bool same_lattice(const Lattice& o) const;

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

std::size_t lattice_rank(const Lattice& l);

// Lemma criterion: all invariant factors of the basis matrix equal 1.
bool is_primitive_set(const Lattice& l);

// Basis of span_Q(l) intersect Z^r (the saturation); primitive, same rank.
Lattice primitive_basis_of_span(const Lattice& l);

// {n in Z^r : b n^T = 0}, returned with a primitive basis.
Lattice kernel_lattice(const IntMatrix& b);

// Rows span the dual lattice of l inside span_R(l):
// {v : v . x in Z for all x in l}. Pairing basis_i . dual_j = delta_ij.
RationalMatrix dual_lattice_basis(const Lattice& l);

// Product of invariant factors of the basis matrix; 1 iff primitive.
Int saturation_index(const Lattice& l);

}  // namespace md
