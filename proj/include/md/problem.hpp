#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "md/density.hpp"

namespace md {

// Parsed problem file: line-oriented "key = value", '#' comments. Kinds:
//   rational-circle   differences=1/13,3/13,4/13
//   integer-vectors   differences=(1),(3),(8)
//   explicit-lattice  dim=2 basis=(1,2)
//   corank1-direct    factors=2,4 differences=(1,0|0),(0,1|2)
struct ProblemFile {
    std::string kind;
    std::vector<Rat> fractions;                            // rational-circle
    std::vector<std::vector<Int>> vectors;                 // integer-vectors
    std::size_t dim = 0;                                   // explicit-lattice
    std::vector<std::vector<Int>> basis;                   // explicit-lattice
    std::vector<Int> factors;                              // corank1-direct
    std::vector<std::pair<std::vector<Int>, Int>> direct;  // corank1-direct (t|h)

    // options (CLI flags override)
    std::size_t max_folner = 3;
    unsigned state_bits = 24;
    std::size_t grid = 0;  // 0 = default 512 * max support
    std::size_t dual_radius = 5;
};

ProblemFile parse_problem(const std::string& text);

DifferenceProblem build_problem(const ProblemFile& pf);

// stable fingerprint of the canonical quotient form (invariant factors, free
// rank, sorted differences): isomorphic presentations share cache entries
std::uint64_t problem_fingerprint(const DifferenceProblem& p);

Rat parse_rational(const std::string& s);  // "a/b" or "a"

}  // namespace md
