#include "md/periodic_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace md {

std::vector<Int> PeriodSubgroup::coords(const QuotientGroup& g, const GroupElement& x) const {
    std::vector<Int> y;
    y.reserve(width_);
    y.insert(y.end(), x.torsion.begin(), x.torsion.end());
    y.insert(y.end(), x.free_part.begin(), x.free_part.end());
    return y;
}

GroupElement PeriodSubgroup::from_coords(const QuotientGroup& g, std::vector<Int> y) const {
    GroupElement e;
    const std::size_t d = g.invariant_factors().size();
    e.torsion.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
    e.free_part.assign(y.begin() + static_cast<std::ptrdiff_t>(d), y.end());
    return g.reduce(std::move(e));
}

PeriodSubgroup::PeriodSubgroup(const QuotientGroup& g, std::vector<GroupElement> generators)
    : gens_(std::move(generators)) {
    const std::size_t d = g.invariant_factors().size();
    width_ = d + g.free_rank();
    stacked_ = IntMatrix(gens_.size() + d, width_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<Int> y = coords(g, gens_[i]);
        for (std::size_t j = 0; j < width_; ++j) stacked_.at(i, j) = y[j];
    }
    for (std::size_t j = 0; j < d; ++j) stacked_.at(gens_.size() + j, j) = g.invariant_factors()[j];
    if (width_ == 0) {
        index_ = 1;
        return;
    }
    snf_ = smith_normal_form(stacked_);
    if (snf_.rank() != width_)
        throw std::invalid_argument("period subgroup does not have finite index");
    index_ = 1;
    for (const Int& a : snf_.invariant_factors) index_ *= a;
}

bool PeriodSubgroup::contains(const QuotientGroup& g, const GroupElement& x) const {
    if (width_ == 0) return true;
    return in_integer_row_span(stacked_, coords(g, x));
}

GroupElement PeriodSubgroup::reduce(const QuotientGroup& g, const GroupElement& x) const {
    if (width_ == 0) return g.zero();
    std::vector<Int> y = snf_.Vinv.apply_left(coords(g, x));
    for (std::size_t i = 0; i < width_; ++i) y[i] = mod_floor(y[i], snf_.invariant_factors[i]);
    return from_coords(g, snf_.V.apply_left(y));
}

std::vector<GroupElement> PeriodSubgroup::cosets(const QuotientGroup& g, std::uint64_t cap) const {
    if (index_ > Int(cap)) {
        std::ostringstream os;
        os << "period subgroup index " << index_ << " exceeds cap " << cap;
        throw CapExceeded(os.str());
    }
    std::vector<GroupElement> out;
    if (width_ == 0) {
        out.push_back(g.zero());
        return out;
    }
    std::vector<Int> y(width_, Int(0));
    for (;;) {
        out.push_back(reduce(g, from_coords(g, snf_.V.apply_left(y))));
        std::size_t k = 0;
        while (k < width_) {
            y[k] += 1;
            if (y[k] < snf_.invariant_factors[k]) break;
            y[k] = 0;
            ++k;
        }
        if (k == width_) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string PeriodicSet::describe() const {
    std::ostringstream os;
    os << "cell {";
    for (std::size_t i = 0; i < cell.size(); ++i) os << (i ? ", " : "") << cell[i].str();
    os << "} period <";
    const auto& gens = period.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].str();
    os << "> index " << period.index() << " density " << rat_str(density);
    return os.str();
}

PeriodicSet make_periodic_set(const QuotientGroup& g, std::vector<GroupElement> period_gens,
                              std::vector<GroupElement> cell) {
    PeriodSubgroup sub(g, std::move(period_gens));
    // canonicalize the cell: one representative per coset, deterministic order
    std::set<GroupElement> reduced;
    for (const GroupElement& c : cell) reduced.insert(sub.reduce(g, c));
    if (reduced.size() != cell.size())
        throw std::invalid_argument("cell has repeated elements modulo the period");
    Rat density(Int(reduced.size()), sub.index());
    return PeriodicSet{g, std::move(sub), {reduced.begin(), reduced.end()}, density};
}

bool verify_avoiding(const PeriodicSet& s, const DifferenceProblem& p) {
    if (!s.group.same_presentation(p.group)) throw std::invalid_argument("group mismatch");
    for (const GroupElement& a : s.cell)
        for (const GroupElement& b : s.cell) {
            GroupElement diff = s.group.sub(a, b);
            for (const GroupElement& d : p.differences) {
                if (s.period.contains(s.group, s.group.sub(diff, d))) return false;
                if (s.period.contains(s.group, s.group.add(diff, d))) return false;
            }
        }
    return true;
}

bool check_tiling_complement(const std::vector<GroupElement>& f, const PeriodicSet& c,
                             std::uint64_t cap) {
    const QuotientGroup& g = c.group;
    std::vector<GroupElement> classes = c.period.cosets(g, cap);
    std::set<GroupElement> covered;
    for (const GroupElement& x : f)
        for (const GroupElement& a : c.cell) {
            GroupElement r = c.period.reduce(g, g.add(x, a));
            if (!covered.insert(r).second) return false;  // double cover
        }
    return covered.size() == classes.size();
}

}  // namespace md
