#pragma once

#include <cstdint>
#include <vector>

#include "md/group.hpp"

namespace md {

inline constexpr std::size_t kDefaultVertexCap = 64;

struct IndependentSetResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // vertex indices, canonical order
};

// Exact maximum independent set, branch-and-bound with a greedy clique-cover
// bound. Deterministic under the given vertex order.
IndependentSetResult max_independent_set_masks(const std::vector<std::uint64_t>& adjacency);

IndependentSetResult max_independent_set(const CayleyGraph& g,
                                         std::size_t cap = kDefaultVertexCap);

}  // namespace md
