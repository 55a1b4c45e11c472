#include "md/mean_cycle.hpp"

#include <algorithm>
#include <optional>

namespace md {

MeanCycleResult max_mean_cycle(std::size_t n, const std::vector<WeightedEdge>& edges) {
    if (n == 0) throw Acyclic("empty graph");
    // d[k][v] = max weight of a k-edge walk ending at v, from any start vertex
    std::vector<std::vector<std::optional<Rat>>> d(n + 1,
                                                   std::vector<std::optional<Rat>>(n));
    std::vector<std::vector<std::size_t>> pred(n + 1, std::vector<std::size_t>(n, 0));
    for (std::size_t v = 0; v < n; ++v) d[0][v] = Rat(0);
    for (std::size_t k = 1; k <= n; ++k)
        for (const WeightedEdge& e : edges) {
            if (!d[k - 1][e.from]) continue;
            Rat cand = *d[k - 1][e.from] + e.weight;
            auto& cur = d[k][e.to];
            if (!cur || cand > *cur || (cand == *cur && e.from < pred[k][e.to])) {
                cur = cand;
                pred[k][e.to] = e.from;
            }
        }

    std::optional<Rat> best;
    std::size_t best_v = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!d[n][v]) continue;
        std::optional<Rat> inner;  // min over k of (d_n - d_k)/(n-k)
        for (std::size_t k = 0; k < n; ++k) {
            if (!d[k][v]) continue;
            Rat m = (*d[n][v] - *d[k][v]) / Rat(Int(n - k));
            if (!inner || m < *inner) inner = m;
        }
        if (inner && (!best || *inner > *best || (*inner == *best && v < best_v))) {
            best = inner;
            best_v = v;
        }
    }
    if (!best) throw Acyclic("graph has no cycle");

    // walk predecessors from d[n][best_v]; any repeated vertex closes a
    // maximum-mean cycle
    std::vector<std::size_t> walk(n + 1);
    walk[n] = best_v;
    for (std::size_t k = n; k > 0; --k) walk[k - 1] = pred[k][walk[k]];
    std::vector<std::ptrdiff_t> seen(n, -1);
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (seen[walk[k]] >= 0) {
            lo = static_cast<std::size_t>(seen[walk[k]]);
            hi = k;
            break;
        }
        seen[walk[k]] = static_cast<std::ptrdiff_t>(k);
    }
    std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(lo),
                                   walk.begin() + static_cast<std::ptrdiff_t>(hi));
    // rotate so the smallest vertex encoding leads (deterministic output)
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return MeanCycleResult{*best, cycle};
}

}  // namespace md
