#pragma once

#include <cstddef>
#include <vector>

#include "md/rational.hpp"

namespace md {

struct WeightedEdge {
    std::size_t from, to;
    Rat weight;
};

struct MeanCycleResult {
    Rat mean;
    std::vector<std::size_t> cycle;  // vertices in order, cycle[0] smallest encoding
};

struct Acyclic : std::runtime_error {
    explicit Acyclic(const std::string& what) : std::runtime_error(what) {}
};

// Maximum mean-weight cycle, exact rationals (Karp's recurrence with
// predecessor extraction). Throws Acyclic when the graph has no cycle.
MeanCycleResult max_mean_cycle(std::size_t vertex_count, const std::vector<WeightedEdge>& edges);

}  // namespace md
