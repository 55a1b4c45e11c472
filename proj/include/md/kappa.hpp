#pragma once

#include <string>
#include <utility>
#include <vector>

#include "md/lattice.hpp"

namespace md {

// Candidate point of the closed subgroup generated by the difference data,
// with the packing value it certifies.
struct KappaWitness {
    std::vector<Rat> beta;    // one coordinate per difference / ambient dim
    Rat value;                // min_i distance of beta_i to the nearest integer
    bool beta_exact = true;
    std::string certificate;  // how beta was found
};

// Exact kappa for rational circle data: exhaustive scan of the finite cyclic
// closure of Z.alpha (order = lcm of the denominators).
KappaWitness kappa_rational(const std::vector<Rat>& fractions);

// Sound lower bound from dual-lattice points shifted along the rational
// orthogonal complement of span(Lambda). Exact piecewise-linear maximization
// when the complement has dimension 1; dyadic grid refinement otherwise. The
// value is the exact evaluation at the returned beta.
KappaWitness kappa_dual_lower(const Lattice& l, std::size_t search_radius = 5,
                              std::size_t refinement = 3);

// Every basis row has even coordinate sum; then the density is exactly 1/2.
bool half_parity_check(const Lattice& l);

struct NotAvoiding : std::runtime_error {
    explicit NotAvoiding(const std::string& w) : std::runtime_error(w) {}
};

// Pairwise-disjoint half-open rational intervals in [0,1), sorted.
struct IntervalSet {
    std::vector<std::pair<Rat, Rat>> intervals;
    Rat measure;
};

// {x : ||n x|| < b/2} as |n| half-open intervals, verified avoiding for the
// given differences by exact interval arithmetic. Throws NotAvoiding.
IntervalSet interval_construction(const std::vector<Rat>& fractions, const Int& n, const Rat& b);

}  // namespace md
