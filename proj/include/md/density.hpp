#pragma once

#include <optional>
#include <string>
#include <vector>

#include "md/independent_set.hpp"
#include "md/periodic_set.hpp"

namespace md {

struct BoundEntry {
    Rat value;
    std::string method;  // producing rule, e.g. "folner(N=2)", "kappa", "delsarte"
    std::string note;    // caveats, e.g. "tiling assumed, not verified"
    std::optional<PeriodicSet> witness;
};

struct DensityReport {
    std::optional<Rat> exact;
    std::string exact_method;
    std::optional<PeriodicSet> witness;  // avoiding set attaining `exact`
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::vector<std::string> notes;  // cap exceedances and other caveats

    std::optional<Rat> best_lower() const;
    std::optional<Rat> best_upper() const;
    void add_lower(Rat v, std::string method, std::string note = {},
                   std::optional<PeriodicSet> w = std::nullopt);
    void add_upper(Rat v, std::string method, std::string note = {});
};

// Exact density for a finite quotient: independence number of the Cayley
// graph over the whole group, witness as a trivially-periodic set.
DensityReport density_finite_group(const DifferenceProblem& p,
                                   std::size_t vertex_cap = kDefaultVertexCap);

// alpha(induced graph on F_N) / |F_N|; always a valid upper bound.
Rat folner_upper_bound(const DifferenceProblem& p, std::size_t n,
                       std::size_t vertex_cap = kDefaultVertexCap,
                       std::uint64_t enum_cap = kDefaultEnumerationCap);

// alpha(induced graph on the tile) / |tile|; an upper bound provided the tile
// tiles the group — the caller asserts that.
Rat tile_upper_bound(const DifferenceProblem& p, const std::vector<GroupElement>& tile,
                     std::size_t vertex_cap = kDefaultVertexCap);

// floor(k/2)/k with k the l1-norm; signs and zero coordinates immaterial.
Rat rank1_density(const std::vector<Int>& m);

// Fundamental domain of the complementary lattice action on Z^r/Zm: one
// element per value of the weight form, k in total.
std::vector<GroupElement> rank1_tile(const std::vector<Int>& m);

// Optimal avoiding periodic set for the rank-1 problem: the even weight
// classes (dropping k-1 when k is odd) over the complementary period lattice.
PeriodicSet rank1_construction(const std::vector<Int>& m);

struct Corank1Options {
    unsigned state_bits = 24;          // cap on |G| * (R-1)
    std::size_t fallback_steps = 4096;  // greedy walk length when over cap
    std::size_t vertex_cap = kDefaultVertexCap;
};

// Exact density for quotients G x Z via the window-state transition graph and
// its maximum mean cycle. Over the state cap, degrades to a bounds-only report
// (greedy periodic lower bound + Folner upper bound).
DensityReport corank1_density(const DifferenceProblem& p, const Corank1Options& opt = {});

// Parity-class start, then greedily delete one endpoint per residual edge.
// Experimental probe; no optimality claim. s must be complementary to the
// problem lattice (its image has finite index in the quotient).
PeriodicSet greedy_parity_construction(const DifferenceProblem& p, const Lattice& s,
                                       std::uint64_t enum_cap = kDefaultEnumerationCap);

}  // namespace md
