#pragma once

#include <optional>
#include <string>

#include "md/group.hpp"

namespace md {

// Finite-index subgroup of a quotient group, generated by arbitrary group
// elements. Index/membership/reduction go through the SNF of the stacked
// generator + torsion-relation matrix.
class PeriodSubgroup {
public:
    PeriodSubgroup(const QuotientGroup& g, std::vector<GroupElement> generators);

    const std::vector<GroupElement>& generators() const { return gens_; }
    const Int& index() const { return index_; }  // index in the quotient group
    bool contains(const QuotientGroup& g, const GroupElement& x) const;
    GroupElement reduce(const QuotientGroup& g, const GroupElement& x) const;
    // one canonical representative per coset; size = index
    std::vector<GroupElement> cosets(const QuotientGroup& g,
                                     std::uint64_t cap = kDefaultEnumerationCap) const;

private:
    std::vector<GroupElement> gens_;
    IntMatrix stacked_;  // generator rows + alpha_j relation rows, width d+f
    SmithDecomposition snf_;
    Int index_;
    std::size_t width_;

    std::vector<Int> coords(const QuotientGroup& g, const GroupElement& x) const;
    GroupElement from_coords(const QuotientGroup& g, std::vector<Int> y) const;
};

// Periodic subset of a quotient group: finite fundamental cell repeated along
// a finite-index period subgroup.
struct PeriodicSet {
    QuotientGroup group;
    PeriodSubgroup period;
    std::vector<GroupElement> cell;  // distinct modulo the period subgroup
    Rat density;                     // |cell| / index

    std::string describe() const;
};

PeriodicSet make_periodic_set(const QuotientGroup& g, std::vector<GroupElement> period_gens,
                              std::vector<GroupElement> cell);

// (A - A) disjoint from the difference set, checked exactly on cell pairs.
bool verify_avoiding(const PeriodicSet& s, const DifferenceProblem& p);

// Do the translates f + c cover the group exactly once?
bool check_tiling_complement(const std::vector<GroupElement>& f, const PeriodicSet& c,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace md
