#pragma once

#include <vector>

#include "md/rational.hpp"

namespace md {

struct LpSolution {
    Rat objective;
    std::vector<Rat> x;                // primal values, all columns
    std::vector<std::size_t> basis;    // optimal basic column indices
};

struct LpInfeasible : std::runtime_error {
    explicit LpInfeasible(const std::string& w) : std::runtime_error(w) {}
};
struct LpUnbounded : std::runtime_error {
    explicit LpUnbounded(const std::string& w) : std::runtime_error(w) {}
};

// min c.x subject to A x = b, x >= 0. Exact-rational two-phase simplex,
// Dantzig pricing with a Bland fallback against cycling. Deterministic.
LpSolution simplex_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<Rat>& c);

}  // namespace md
