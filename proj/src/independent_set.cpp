#include "md/independent_set.hpp"

#include <bit>
#include <sstream>

namespace md {

namespace {

struct Solver {
    const std::vector<std::uint64_t>& adj;
    std::size_t n;
    std::size_t best = 0;
    std::uint64_t best_set = 0;

    // greedy clique cover of the candidate set: #cliques bounds the
    // independence number of the candidate subgraph from above
    std::size_t clique_cover_bound(std::uint64_t cand) const {
        std::size_t cliques = 0;
        while (cand) {
            std::uint64_t v = cand & (~cand + 1);
            std::size_t vi = static_cast<std::size_t>(std::countr_zero(cand));
            std::uint64_t clique = v;
            std::uint64_t common = adj[vi] & cand;
            cand ^= v;
            while (common) {
                std::size_t ui = static_cast<std::size_t>(std::countr_zero(common));
                std::uint64_t u = std::uint64_t(1) << ui;
                clique |= u;
                cand &= ~u;
                common &= adj[ui];
            }
            (void)clique;
            ++cliques;
        }
        return cliques;
    }

    void expand(std::uint64_t cur, std::size_t cur_size, std::uint64_t cand) {
        if (cand == 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        if (cur_size + clique_cover_bound(cand) <= best) return;
        std::size_t vi = static_cast<std::size_t>(std::countr_zero(cand));
        std::uint64_t v = std::uint64_t(1) << vi;
        // include v
        expand(cur | v, cur_size + 1, cand & ~(adj[vi] | v));
        // exclude v
        expand(cur, cur_size, cand & ~v);
    }
};

}  // namespace

IndependentSetResult max_independent_set_masks(const std::vector<std::uint64_t>& adjacency) {
    const std::size_t n = adjacency.size();
    if (n > 64) throw CapExceeded("independent set solver capped at 64 vertices");
    Solver s{adjacency, n};
    std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    s.expand(0, 0, all);
    IndependentSetResult r;
    r.size = s.best;
    for (std::size_t i = 0; i < n; ++i)
        if (s.best_set & (std::uint64_t(1) << i)) r.witness.push_back(i);
    return r;
}

IndependentSetResult max_independent_set(const CayleyGraph& g, std::size_t cap) {
    if (g.size() > cap || g.size() > 64) {
        std::ostringstream os;
        os << "graph has " << g.size() << " vertices, cap " << std::min<std::size_t>(cap, 64);
        throw CapExceeded(os.str());
    }
    std::vector<std::uint64_t> adj(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adj[i][j]) adj[i] |= std::uint64_t(1) << j;
    return max_independent_set_masks(adj);
}

}  // namespace md
