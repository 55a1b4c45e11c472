#include "md/density.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

#include "md/mean_cycle.hpp"

namespace md {

std::optional<Rat> DensityReport::best_lower() const {
    std::optional<Rat> b;
    for (const BoundEntry& e : lower)
        if (!b || e.value > *b) b = e.value;
    return b;
}

std::optional<Rat> DensityReport::best_upper() const {
    std::optional<Rat> b;
    for (const BoundEntry& e : upper)
        if (!b || e.value < *b) b = e.value;
    return b;
}

void DensityReport::add_lower(Rat v, std::string method, std::string note,
                              std::optional<PeriodicSet> w) {
    lower.push_back(BoundEntry{std::move(v), std::move(method), std::move(note), std::move(w)});
}

void DensityReport::add_upper(Rat v, std::string method, std::string note) {
    upper.push_back(BoundEntry{std::move(v), std::move(method), std::move(note), std::nullopt});
}

DensityReport density_finite_group(const DifferenceProblem& p, std::size_t vertex_cap) {
    if (!p.group.is_finite()) throw std::invalid_argument("quotient is not finite");
    std::vector<GroupElement> all = p.group.enumerate_torsion();
    CayleyGraph g = induced_cayley_graph(p, all);
    IndependentSetResult mis = max_independent_set(g, vertex_cap);
    std::vector<GroupElement> cell;
    for (std::size_t v : mis.witness) cell.push_back(all[v]);
    PeriodicSet w = make_periodic_set(p.group, {}, cell);
    DensityReport rep;
    rep.exact = Rat(Int(mis.size), p.group.order());
    rep.exact_method = "independence number over the full finite group";
    rep.witness = w;
    rep.add_lower(*rep.exact, "witness independent set", "", std::move(w));
    rep.add_upper(*rep.exact, "independence number over the full finite group");
    return rep;
}

Rat folner_upper_bound(const DifferenceProblem& p, std::size_t n, std::size_t vertex_cap,
                       std::uint64_t enum_cap) {
    FolnerBox box = folner_box(p.group, n, enum_cap);
    CayleyGraph g = induced_cayley_graph(p, box.elements);
    IndependentSetResult mis = max_independent_set(g, vertex_cap);
    return Rat(Int(mis.size), Int(box.elements.size()));
}

Rat tile_upper_bound(const DifferenceProblem& p, const std::vector<GroupElement>& tile,
                     std::size_t vertex_cap) {
    if (tile.empty()) throw std::invalid_argument("empty tile");
    CayleyGraph g = induced_cayley_graph(p, tile);
    IndependentSetResult mis = max_independent_set(g, vertex_cap);
    return Rat(Int(mis.size), Int(tile.size()));
}

namespace {

Int l1_norm(const std::vector<Int>& m) {
    Int k(0);
    for (const Int& v : m) k += (v < 0) ? Int(-v) : v;
    return k;
}

// The weight form u: u_i = sign(m_i), u_i = 1 on zero coordinates. Then
// u.m = |m|_1 = k and u induces a surjection of the quotient onto Z_k whose
// kernel is the period of the rank-1 construction.
std::vector<Int> weight_form(const std::vector<Int>& m) {
    std::vector<Int> u(m.size(), Int(1));
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0) u[i] = -1;
    return u;
}

// One representative per weight class 0..k-1, consecutive points exactly one
// basis step apart: at each step advance the coordinate furthest behind its
// quota j*|m_i|/k (smallest index on ties). After k steps the walk reaches m,
// so the induced graph on the tile carries the full k-cycle.
std::vector<std::vector<Int>> rank1_domain_walk(const std::vector<Int>& m, const Int& k) {
    const std::size_t r = m.size();
    std::vector<Int> x(r, Int(0));  // position in |m|-space
    std::vector<std::vector<Int>> pts{std::vector<Int>(r, Int(0))};
    for (Int j(1); j < k; ++j) {
        std::size_t best = r;
        Int best_deficit(0);
        for (std::size_t i = 0; i < r; ++i) {
            Int mi = (m[i] < 0) ? Int(-m[i]) : m[i];
            if (mi == 0) continue;
            Int deficit = j * mi - k * x[i];
            if (best == r || deficit > best_deficit) {
                best = i;
                best_deficit = deficit;
            }
        }
        x[best] += 1;
        std::vector<Int> p(r, Int(0));
        for (std::size_t i = 0; i < r; ++i) p[i] = (m[i] < 0) ? Int(-x[i]) : x[i];
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace

Rat rank1_density(const std::vector<Int>& m) {
    Int k = l1_norm(m);
    if (k == 0) throw ZeroVector("rank-1 density needs a nonzero vector");
    return Rat(k / 2, k);
}

std::vector<GroupElement> rank1_tile(const std::vector<Int>& m) {
    Int k = l1_norm(m);
    if (k == 0) throw ZeroVector("rank-1 tile needs a nonzero vector");
    QuotientGroup g(Lattice(m.size(), IntMatrix::from_rows({m})));
    std::vector<GroupElement> tile;
    for (const std::vector<Int>& p : rank1_domain_walk(m, k)) tile.push_back(g.canonical(p));
    return tile;
}

PeriodicSet rank1_construction(const std::vector<Int>& m) {
    Int k = l1_norm(m);
    if (k == 0) throw ZeroVector("rank-1 construction needs a nonzero vector");
    const std::size_t r = m.size();
    QuotientGroup g(Lattice(r, IntMatrix::from_rows({m})));
    std::vector<Int> u = weight_form(m);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        std::vector<Int> t(r, Int(0));
        t[i + 1] = u[i + 1];
        t[i] = -u[i];
        gens.push_back(g.canonical(t));
    }
    // even weights; for odd k additionally drop weight k-1 so the classes
    // stay pairwise more than one apart cyclically
    std::vector<GroupElement> cell;
    bool odd = (k % 2 != 0);
    std::vector<std::vector<Int>> walk = rank1_domain_walk(m, k);
    for (Int j(0); j < k; j += 2) {
        if (odd && j == k - 1) continue;
        cell.push_back(g.canonical(walk[static_cast<std::size_t>(j)]));
    }
    return make_periodic_set(g, std::move(gens), std::move(cell));
}

namespace {

struct Corank1Data {
    std::size_t gsize = 1;             // order of the finite component G
    std::vector<Int> factors;          // torsion factors of the quotient
    std::vector<std::size_t> sub_t;    // per (diff, g): index of g - t, flattened
    std::vector<long long> h;          // normalized Z-components, h >= 0
    std::size_t ndiff = 0;
    std::size_t window = 0;            // R - 1 = max h

    std::size_t diff_sub(std::size_t d, std::size_t gidx) const {
        return sub_t[d * gsize + gidx];
    }
};

std::size_t torsion_index(const std::vector<Int>& factors, const std::vector<Int>& t) {
    std::size_t idx = 0;
    for (std::size_t i = factors.size(); i-- > 0;)
        idx = idx * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>(t[i]);
    return idx;
}

std::vector<Int> torsion_tuple(const std::vector<Int>& factors, std::size_t idx) {
    std::vector<Int> t(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::size_t a = static_cast<std::size_t>(factors[i]);
        t[i] = Int(idx % a);
        idx /= a;
    }
    return t;
}

Corank1Data corank1_data(const DifferenceProblem& p) {
    Corank1Data d;
    d.factors = p.group.invariant_factors();
    d.gsize = 1;
    for (const Int& a : d.factors) d.gsize *= static_cast<std::size_t>(a);
    d.ndiff = p.differences.size();
    d.sub_t.resize(d.ndiff * d.gsize);
    for (std::size_t k = 0; k < d.ndiff; ++k) {
        GroupElement diff = p.differences[k];
        if (diff.free_part[0] < 0) diff = p.group.neg(diff);
        d.h.push_back(static_cast<long long>(diff.free_part[0]));
        for (std::size_t gi = 0; gi < d.gsize; ++gi) {
            std::vector<Int> t = torsion_tuple(d.factors, gi);
            for (std::size_t i = 0; i < d.factors.size(); ++i)
                t[i] = mod_floor(t[i] - diff.torsion[i], d.factors[i]);
            d.sub_t[k * d.gsize + gi] = torsion_index(d.factors, t);
        }
    }
    d.window = 0;
    for (long long v : d.h) d.window = std::max(d.window, static_cast<std::size_t>(v));
    return d;
}

// Can fiber f be appended after the window `blocks` (blocks[j] = fiber j
// positions back)?  Checks every difference against the new position.
template <class BlockAt>
bool admissible(const Corank1Data& d, std::uint32_t f, BlockAt block_at) {
    for (std::size_t k = 0; k < d.ndiff; ++k) {
        long long h = d.h[k];
        std::uint32_t other = (h == 0) ? f : block_at(static_cast<std::size_t>(h) - 1);
        if (other == 0) continue;
        for (std::uint32_t rest = f; rest;) {
            std::size_t gi = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            if (other & (std::uint32_t(1) << d.diff_sub(k, gi))) return false;
        }
    }
    return true;
}

PeriodicSet cycle_to_periodic_set(const QuotientGroup& g, const Corank1Data& d,
                                  const std::vector<std::uint32_t>& fibers) {
    std::vector<GroupElement> cell;
    for (std::size_t i = 0; i < fibers.size(); ++i)
        for (std::uint32_t rest = fibers[i]; rest;) {
            std::size_t gi = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            GroupElement e;
            e.torsion = torsion_tuple(d.factors, gi);
            e.free_part = {Int(static_cast<long long>(i))};
            cell.push_back(e);
        }
    GroupElement period;
    period.torsion.assign(d.factors.size(), Int(0));
    period.free_part = {Int(static_cast<long long>(fibers.size()))};
    return make_periodic_set(g, {period}, std::move(cell));
}

// Greedy first-fit periodic lower bound: walk the window machine taking the
// lexicographically-greedy maximal fiber; the first repeated window closes a
// genuine avoiding periodic set.
std::optional<PeriodicSet> greedy_walk_lower(const DifferenceProblem& p, const Corank1Data& d,
                                             std::size_t steps) {
    if (d.gsize > 32) return std::nullopt;
    std::vector<std::uint32_t> win(std::max<std::size_t>(d.window, 1), 0);
    auto block_at = [&](std::size_t j) { return win[j]; };
    std::vector<std::uint32_t> fibers;
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    seen.emplace(win, 0);
    for (std::size_t step = 0; step < steps; ++step) {
        std::uint32_t f = 0;
        for (std::size_t gi = 0; gi < d.gsize; ++gi) {
            std::uint32_t cand = f | (std::uint32_t(1) << gi);
            if (admissible(d, cand, block_at)) f = cand;
        }
        fibers.push_back(f);
        for (std::size_t j = win.size(); j-- > 1;) win[j] = win[j - 1];
        win[0] = f;
        auto [it, fresh] = seen.emplace(win, step + 1);
        if (!fresh) {
            std::vector<std::uint32_t> cycle(fibers.begin() + static_cast<std::ptrdiff_t>(it->second),
                                             fibers.end());
            return cycle_to_periodic_set(p.group, d, cycle);
        }
    }
    return std::nullopt;
}

void attach_fallback_bounds(DensityReport& rep, const DifferenceProblem& p,
                            const Corank1Options& opt) {
    const Corank1Data d = corank1_data(p);
    if (auto w = greedy_walk_lower(p, d, opt.fallback_steps))
        rep.add_lower(w->density, "greedy periodic walk", "heuristic, not optimal", std::move(w));
    // widest Folner box the independent-set solver can take
    std::size_t best_n = 0;
    for (std::size_t n = 0; d.gsize * (2 * n + 3) <= opt.vertex_cap; ++n) best_n = n + 1;
    if (d.gsize <= opt.vertex_cap) {
        std::ostringstream tag;
        tag << "folner(N=" << best_n << ")";
        rep.add_upper(folner_upper_bound(p, best_n, opt.vertex_cap), tag.str());
    } else {
        rep.add_upper(Rat(1), "trivial");
    }
}

}  // namespace

DensityReport corank1_density(const DifferenceProblem& p, const Corank1Options& opt) {
    if (p.group.free_rank() != 1)
        throw std::invalid_argument("corank-1 solver needs free rank exactly 1");
    const Corank1Data d = corank1_data(p);
    const std::size_t bits = d.gsize * d.window;
    if (bits > opt.state_bits || d.gsize > 32) {
        DensityReport rep;
        std::ostringstream os;
        os << "window state space needs " << bits << " bits, cap " << opt.state_bits;
        rep.notes.push_back(os.str());
        attach_fallback_bounds(rep, p, opt);
        return rep;
    }

    // Window states over the reachable (= internally consistent) part of the
    // machine; every periodic avoiding set is a cycle here and vice versa.
    const std::uint64_t mask = (bits == 64) ? ~std::uint64_t(0)
                                            : ((std::uint64_t(1) << bits) - 1);
    const std::uint32_t fiber_count = std::uint32_t(1) << d.gsize;
    std::unordered_map<std::uint64_t, std::size_t> id;
    std::vector<std::uint64_t> code;
    std::vector<WeightedEdge> edges;
    auto intern = [&](std::uint64_t s) {
        auto [it, fresh] = id.emplace(s, code.size());
        if (fresh) code.push_back(s);
        return it->second;
    };
    intern(0);
    for (std::size_t v = 0; v < code.size(); ++v) {
        const std::uint64_t s = code[v];
        auto block_at = [&](std::size_t j) {
            return static_cast<std::uint32_t>((s >> (j * d.gsize)) & ((std::uint64_t(1) << d.gsize) - 1));
        };
        for (std::uint32_t f = 0; f < fiber_count; ++f) {
            if (!admissible(d, f, block_at)) continue;
            std::uint64_t next = ((s << d.gsize) | f) & mask;
            edges.push_back(WeightedEdge{v, intern(next), Rat(std::popcount(f))});
        }
    }

    MeanCycleResult mc = max_mean_cycle(code.size(), edges);
    // read the fibers off the optimal cycle (fiber appended entering a state
    // is its low block)
    std::vector<std::uint32_t> fibers;
    for (std::size_t i = 0; i < mc.cycle.size(); ++i) {
        std::uint64_t s = code[mc.cycle[(i + 1) % mc.cycle.size()]];
        fibers.push_back(static_cast<std::uint32_t>(s & ((std::uint64_t(1) << d.gsize) - 1)));
    }
    DensityReport rep;
    rep.exact = mc.mean / Rat(Int(d.gsize));
    rep.exact_method = "window-state maximum mean cycle";
    rep.witness = cycle_to_periodic_set(p.group, d, fibers);
    rep.add_lower(*rep.exact, "optimal cycle witness", "", rep.witness);
    rep.add_upper(*rep.exact, "window-state maximum mean cycle");
    return rep;
}

PeriodicSet greedy_parity_construction(const DifferenceProblem& p, const Lattice& s,
                                       std::uint64_t enum_cap) {
    const QuotientGroup& g = p.group;
    if (s.ambient_dim() != g.ambient_dim()) throw std::invalid_argument("ambient dim mismatch");
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < s.rank(); ++i) gens.push_back(g.canonical(s.basis().row(i)));
    PeriodSubgroup sub(g, gens);
    std::vector<GroupElement> reps = sub.cosets(g, enum_cap);

    auto parity = [&](const GroupElement& e) {
        Int sum(0);
        for (const Int& v : g.lift(e)) sum += v;
        return static_cast<int>(mod_floor(sum, Int(2)));
    };
    auto conflicting = [&](const GroupElement& a, const GroupElement& b) {
        GroupElement diff = g.sub(a, b);
        for (const GroupElement& e : p.differences) {
            if (sub.contains(g, g.sub(diff, e))) return true;
            if (sub.contains(g, g.add(diff, e))) return true;
        }
        return false;
    };

    std::vector<GroupElement> best;
    bool have_best = false;
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<GroupElement> cell;
        for (const GroupElement& e : reps)
            if (parity(e) == cls) cell.push_back(e);
        // delete the lex-larger endpoint of the first residual edge, repeat
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t i = 0; i < cell.size() && !dirty; ++i)
                for (std::size_t j = i; j < cell.size() && !dirty; ++j)
                    if (conflicting(cell[i], cell[j])) {
                        cell.erase(cell.begin() + static_cast<std::ptrdiff_t>(j));
                        dirty = true;
                    }
        }
        if (!have_best || cell.size() > best.size()) {
            best = std::move(cell);
            have_best = true;
        }
    }
    return make_periodic_set(g, std::move(gens), std::move(best));
}

}  // namespace md
