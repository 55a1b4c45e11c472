#include "md/simplex.hpp"

#include <algorithm>

namespace md {

namespace {

struct Tableau {
    std::vector<std::vector<Rat>> t;  // m rows, width ncols + 1 (rhs last)
    std::vector<std::size_t> basis;   // basic column per row
    std::size_t ncols;

    std::size_t m() const { return t.size(); }
    Rat& rhs(std::size_t i) { return t[i][ncols]; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rat piv = t[pr][pc];
        for (Rat& v : t[pr]) v /= piv;
        for (std::size_t i = 0; i < m(); ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rat f = t[i][pc];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    }

    // min cost.x over the columns in [0, limit); returns false on unbounded
    bool optimize(const std::vector<Rat>& cost, std::size_t limit) {
        const std::size_t bland_after = 20 * (m() + limit);
        for (std::size_t iter = 0;; ++iter) {
            // reduced costs z_j = c_j - c_B . column_j
            std::size_t enter = limit;
            Rat best(0);
            for (std::size_t j = 0; j < limit; ++j) {
                Rat z = cost[j];
                for (std::size_t i = 0; i < m(); ++i)
                    if (cost[basis[i]] != 0) z -= cost[basis[i]] * t[i][j];
                if (z < 0 && (iter >= bland_after ? enter == limit : z < best)) {
                    enter = j;
                    best = z;
                    if (iter >= bland_after) break;  // Bland: first improving
                }
            }
            if (enter == limit) return true;
            std::size_t leave = m();
            Rat ratio(0);
            for (std::size_t i = 0; i < m(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rat r = rhs(i) / t[i][enter];
                if (leave == m() || r < ratio ||
                    (r == ratio && basis[i] < basis[leave]))
                    leave = i, ratio = r;
            }
            if (leave == m()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution simplex_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<Rat>& c) {
    const std::size_t m = a.size(), n = c.size();
    Tableau tab;
    tab.ncols = n + m;  // artificials appended
    tab.t.assign(m, std::vector<Rat>(tab.ncols + 1, Rat(0)));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? Rat(-a[i][j]) : a[i][j];
        tab.t[i][n + i] = 1;
        tab.rhs(i) = neg ? Rat(-b[i]) : b[i];
        tab.basis[i] = n + i;
    }

    std::vector<Rat> phase1(tab.ncols, Rat(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    if (!tab.optimize(phase1, tab.ncols))
        throw std::logic_error("phase-1 objective unbounded");
    Rat infeas(0);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= n) infeas += tab.rhs(i);
    if (infeas != 0) throw LpInfeasible("constraints have no nonnegative solution");

    // drive zero-valued artificials out; drop rows that are redundant
    for (std::size_t i = 0; i < tab.m();) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                pc = j;
                break;
            }
        if (pc < n) {
            tab.pivot(i, pc);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<Rat> phase2(tab.ncols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!tab.optimize(phase2, n)) throw LpUnbounded("objective unbounded below");

    LpSolution sol;
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < tab.m(); ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
    sol.objective = 0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
    sol.basis = tab.basis;
    return sol;
}

}  // namespace md
