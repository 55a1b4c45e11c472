#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "md/lattice.hpp"

namespace md {

// Canonical representative of an element of Z^r/Lambda: one residue in
// [0, alpha_i) per nontrivial invariant factor, then free coordinates.
struct GroupElement {
    std::vector<Int> torsion;
    std::vector<Int> free_part;

    bool operator==(const GroupElement& o) const {
        return torsion == o.torsion && free_part == o.free_part;
    }
    bool operator<(const GroupElement& o) const {
        if (torsion != o.torsion) return torsion < o.torsion;
        return free_part < o.free_part;
    }
    bool is_zero() const;
    std::string str() const;
};

// The quotient Z^r/Lambda in canonical coordinates obtained from the Smith
// Normal Form of the lattice basis.
class QuotientGroup {
public:
    explicit QuotientGroup(const Lattice& l);

    std::size_t ambient_dim() const { return r_; }
    const Lattice& lattice() const { return lattice_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }  // all > 1
    std::size_t free_rank() const { return free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const;  // product of invariant factors; finite groups only

    GroupElement canonical(const std::vector<Int>& ambient) const;
    std::vector<Int> lift(const GroupElement& g) const;  // some preimage in Z^r

    GroupElement zero() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement reduce(GroupElement g) const;

    // representative of {g, -g} used for difference deduplication
    GroupElement sign_min(const GroupElement& g) const;

    std::vector<GroupElement> enumerate_torsion() const;

    std::string describe() const;  // e.g. "Z_2 + Z_4 + Z^2"

    bool same_presentation(const QuotientGroup& o) const {
        return factors_ == o.factors_ && free_rank_ == o.free_rank_;
    }

private:
    std::size_t r_;
    Lattice lattice_;
    std::vector<Int> factors_;            // nontrivial factors only
    std::vector<std::size_t> torsion_pos_;  // SNF coordinate index per factor
    std::size_t snf_rank_ = 0;
    std::size_t free_rank_;
    IntMatrix V_, Vinv_;  // ambient x = y V, canonical-side y = x Vinv
};

enum class ProblemSource { RationalCircle, IntegerVectors, ExplicitLattice, Corank1Direct };

// A missing-difference problem over a quotient group: the (deduplicated,
// identity-free) difference set, usually the images of the standard basis.
struct DifferenceProblem {
    QuotientGroup group;
    std::vector<GroupElement> differences;  // sign-min reps, sorted, distinct
    ProblemSource source = ProblemSource::ExplicitLattice;

    bool is_difference(const GroupElement& g) const;
};

struct FolnerBox {
    const QuotientGroup* group;
    std::size_t radius;
    std::vector<GroupElement> elements;
};

struct CayleyGraph {
    std::vector<GroupElement> vertices;
    std::vector<std::vector<std::uint8_t>> adj;  // symmetric, loop-free

    std::size_t size() const { return vertices.size(); }
    std::size_t degree(std::size_t v) const;
};

QuotientGroup quotient_of(const Lattice& l);

// Images of e_1..e_r, deduplicated under t ~ -t; IdentityDifference if some
// e_i lies in the lattice.
DifferenceProblem basis_images(const QuotientGroup& g);

DifferenceProblem problem_from_rational_circle(const std::vector<Rat>& fractions);
DifferenceProblem problem_from_integer_vectors(const std::vector<std::vector<Int>>& d);
DifferenceProblem problem_direct(QuotientGroup g, std::vector<GroupElement> diffs,
                                 ProblemSource source);

std::string realize_as_compact_group(const Lattice& l);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

FolnerBox folner_box(const QuotientGroup& g, std::size_t n,
                     std::uint64_t cap = kDefaultEnumerationCap);

CayleyGraph induced_cayley_graph(const DifferenceProblem& p,
                                 const std::vector<GroupElement>& vertices);

}  // namespace md
