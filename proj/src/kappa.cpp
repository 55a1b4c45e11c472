#include "md/kappa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace md {

KappaWitness kappa_rational(const std::vector<Rat>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("empty difference list");
    Int q(1);
    for (const Rat& f : fractions) {
        if (f == 0) throw std::invalid_argument("zero difference");
        q = lcm(q, den(f));
    }
    Int best_n(0);
    Rat best(-1);
    for (Int n(0); n < q; ++n) {
        Rat v(1);
        for (const Rat& f : fractions) {
            Rat d = dist_to_int(Rat(n) * f);
            if (d < v) v = d;
        }
        if (v > best) {
            best = v;
            best_n = n;
        }
    }
    KappaWitness w;
    for (const Rat& f : fractions) w.beta.push_back(frac(Rat(best_n) * f));
    w.value = best;
    std::ostringstream os;
    os << "finite-cyclic enumeration, order " << q << ", N = " << best_n;
    w.certificate = os.str();
    return w;
}

namespace {

Rat objective(const std::vector<Rat>& beta) {
    Rat v(1);
    for (const Rat& b : beta) {
        Rat d = dist_to_int(b);
        if (d < v) v = d;
    }
    return v;
}

// max over s of min_i ||v_i + s w_i||, exact: the objective is piecewise
// linear and 1-periodic in s (w integer), so scan the half-integer
// breakpoints and the pairwise crossings inside each segment.
std::pair<Rat, Rat> best_line_shift(const std::vector<Rat>& v, const std::vector<Int>& w) {
    std::set<Rat> cuts{Rat(0), Rat(1)};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w[i] == 0) continue;
        // v_i + s w_i = m/2 for s in [0,1]
        Int aw = (w[i] < 0) ? Int(-w[i]) : w[i];
        for (Int m = floor_rat(Rat(2) * v[i]) - 2 * aw - 1; m <= floor_rat(Rat(2) * v[i]) + 2 * aw + 1;
             ++m) {
            Rat s = (Rat(m, 2) - v[i]) / Rat(w[i]);
            if (s >= 0 && s <= 1) cuts.insert(s);
        }
    }
    std::vector<Rat> cutlist(cuts.begin(), cuts.end());
    Rat best(-1), best_s(0);
    auto consider = [&](const Rat& s) {
        Rat val(1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat d = dist_to_int(v[i] + s * Rat(w[i]));
            if (d < val) val = d;
        }
        if (val > best) {
            best = val;
            best_s = s;
        }
    };
    for (std::size_t c = 0; c + 1 < cutlist.size(); ++c) {
        const Rat &sa = cutlist[c], &sb = cutlist[c + 1];
        consider(sa);
        consider(sb);
        // linear forms of each coordinate distance on (sa, sb)
        Rat mid = (sa + sb) / 2;
        std::vector<Rat> slope(v.size()), icept(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat y = v[i] + mid * Rat(w[i]);
            Int n = floor_rat(y + Rat(1, 2));
            if (y >= Rat(n)) {
                slope[i] = Rat(w[i]);
                icept[i] = v[i] - Rat(n);
            } else {
                slope[i] = -Rat(w[i]);
                icept[i] = Rat(n) - v[i];
            }
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (slope[i] == slope[j]) continue;
                Rat s = (icept[j] - icept[i]) / (slope[i] - slope[j]);
                if (s > sa && s < sb) consider(s);
            }
    }
    return {best, best_s};
}

}  // namespace

KappaWitness kappa_dual_lower(const Lattice& l, std::size_t search_radius, std::size_t refinement) {
    const std::size_t r = l.ambient_dim();
    KappaWitness best;
    best.value = -1;
    best.certificate = "dual-lattice point + subspace shift";
    auto consider = [&](const std::vector<Rat>& beta, const char* how) {
        Rat v = objective(beta);
        if (v > best.value) {
            best.value = v;
            best.beta = beta;
            std::ostringstream os;
            os << "dual-lattice point + subspace shift (" << how << ")";
            best.certificate = os.str();
        }
    };

    // the all-halves point works whenever every basis row has even sum
    if (half_parity_check(l)) consider(std::vector<Rat>(r, Rat(1, 2)), "half-parity");

    if (l.rank() == 0) {
        if (best.value < 0) consider(std::vector<Rat>(r, Rat(1, 2)), "free torus");
        return best;
    }

    RationalMatrix dual = dual_lattice_basis(l);
    Lattice comp = kernel_lattice(l.basis());
    const std::size_t rank = l.rank(), cdim = comp.rank();

    std::vector<long long> coeff(rank, -static_cast<long long>(search_radius));
    for (;;) {
        std::vector<Rat> v(r, Rat(0));
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t i = 0; i < r; ++i) v[i] += Rat(coeff[j]) * dual.at(j, i);

        if (cdim == 0) {
            consider(v, "dual point");
        } else if (cdim == 1) {
            std::vector<Int> w = comp.basis().row(0);
            auto [val, s] = best_line_shift(v, w);
            std::vector<Rat> beta = v;
            for (std::size_t i = 0; i < r; ++i) beta[i] += s * Rat(w[i]);
            if (val > best.value) consider(beta, "exact line maximization");
        } else {
            // dyadic grid over the shift torus (integer complement rows make
            // the objective 1-periodic per coordinate), then local refinement
            Rat step(1, 8);
            std::vector<Rat> s(cdim, Rat(0)), s_best(cdim, Rat(0));
            Rat local(-1);
            std::vector<std::size_t> idx(cdim, 0);
            for (;;) {
                std::vector<Rat> beta = v;
                for (std::size_t j = 0; j < cdim; ++j)
                    for (std::size_t i = 0; i < r; ++i)
                        beta[i] += Rat(Int(idx[j])) * step * Rat(comp.basis().at(j, i));
                Rat val = objective(beta);
                if (val > local) {
                    local = val;
                    for (std::size_t j = 0; j < cdim; ++j) s_best[j] = Rat(Int(idx[j])) * step;
                }
                std::size_t kpos = 0;
                while (kpos < cdim && ++idx[kpos] == 8) idx[kpos++] = 0;
                if (kpos == cdim) break;
            }
            for (std::size_t round = 0; round < refinement; ++round) {
                step /= 2;
                std::vector<long long> off(cdim, -2);
                for (;;) {
                    std::vector<Rat> shift(cdim);
                    for (std::size_t j = 0; j < cdim; ++j)
                        shift[j] = s_best[j] + Rat(off[j]) * step;
                    std::vector<Rat> beta = v;
                    for (std::size_t j = 0; j < cdim; ++j)
                        for (std::size_t i = 0; i < r; ++i)
                            beta[i] += shift[j] * Rat(comp.basis().at(j, i));
                    Rat val = objective(beta);
                    if (val > local) {
                        local = val;
                        s_best = shift;
                    }
                    std::size_t kpos = 0;
                    while (kpos < cdim && ++off[kpos] == 3) off[kpos++] = -2;
                    if (kpos == cdim) break;
                }
            }
            std::vector<Rat> beta = v;
            for (std::size_t j = 0; j < cdim; ++j)
                for (std::size_t i = 0; i < r; ++i)
                    beta[i] += s_best[j] * Rat(comp.basis().at(j, i));
            consider(beta, "grid refinement");
        }

        std::size_t kpos = 0;
        while (kpos < rank &&
               ++coeff[kpos] > static_cast<long long>(search_radius))
            coeff[kpos++] = -static_cast<long long>(search_radius);
        if (kpos == rank) break;
    }
    return best;
}

bool half_parity_check(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Int sum(0);
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) sum += l.basis().at(i, j);
        if (mod_floor(sum, Int(2)) != 0) return false;
    }
    return true;
}

IntervalSet interval_construction(const std::vector<Rat>& fractions, const Int& n, const Rat& b) {
    if (n == 0) throw std::invalid_argument("n must be nonzero");
    if (b <= 0 || b > 1) throw std::invalid_argument("b must lie in (0, 1]");
    Int an = (n < 0) ? Int(-n) : n;
    Rat half = b / (Rat(2) * Rat(an));
    std::vector<std::pair<Rat, Rat>> raw;
    for (Int j(0); j < an; ++j) {
        Rat center = Rat(j, an);
        Rat lo = center - half, hi = center + half;
        if (lo < 0) {  // wraps across 0
            raw.emplace_back(Rat(0), hi);
            if (lo + 1 < 1) raw.emplace_back(lo + 1, Rat(1));
        } else {
            raw.emplace_back(lo, hi);
        }
    }
    std::sort(raw.begin(), raw.end());

    // exact avoidance check: differences of [l1,u1) x [l2,u2) fill the open
    // interval (l1-u2, u1-l2); no listed fraction may land in it mod 1
    for (const auto& [l1, u1] : raw)
        for (const auto& [l2, u2] : raw) {
            Rat lo = l1 - u2, hi = u1 - l2;
            for (const Rat& f : fractions) {
                for (Int z = floor_rat(lo - f); z <= ceil_rat(hi - f); ++z) {
                    Rat x = f + Rat(z);
                    if (x > lo && x < hi) {
                        std::ostringstream os;
                        os << "difference " << rat_str(f) << " realized between intervals ["
                           << rat_str(l1) << "," << rat_str(u1) << ") and [" << rat_str(l2) << ","
                           << rat_str(u2) << ")";
                        throw NotAvoiding(os.str());
                    }
                }
            }
        }

    IntervalSet out;
    out.intervals = std::move(raw);
    out.measure = 0;
    for (const auto& [lo, hi] : out.intervals) out.measure += hi - lo;
    return out;
}

}  // namespace md
