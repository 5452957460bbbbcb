#include "udgfvs/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "udgfvs/errors.hpp"

namespace udgfvs {

namespace {

using Mask = std::uint64_t;

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds cap) : end_(std::chrono::steady_clock::now() + cap) {}
    void check(const char* what) {
        if ((++ticks_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > end_) {
            throw ResourceError(std::string(what) + ": time cap exceeded");
        }
    }

private:
    std::chrono::steady_clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

// Forest test on the subgraph induced by `alive`, union-find over at most 64 vertices.
bool forest_on(const std::vector<Edge>& edges, Mask alive) {
    int parent[64];
    for (int i = 0; i < 64; ++i) parent[i] = i;
    const auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) {
        if (!(alive >> u & 1) || !(alive >> v & 1)) continue;
        const int a = find(u);
        const int b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

OracleFvs min_fvs_bruteforce(const Graph& g, const OracleBudget& budget) {
    const std::size_t n = g.num_vertices();
    if (n > budget.max_n_subsets || n > 64) {
        throw ResourceError("oracle: n=" + std::to_string(n) + " exceeds subset budget " +
                            std::to_string(budget.max_n_subsets));
    }
    const auto edges = g.edges();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    Deadline deadline(budget.time_cap);
    for (std::size_t s = 0; s <= n; ++s) {
        // lexicographic combinations of size s
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            deadline.check("oracle");
            Mask deleted = 0;
            for (std::size_t c : comb) deleted |= Mask{1} << c;
            if (forest_on(edges, all & ~deleted)) {
                OracleFvs out;
                out.size = s;
                for (std::size_t c : comb) out.witness.push_back(static_cast<Vertex>(c));
                return out;
            }
            std::size_t i = s;
            while (i > 0 && comb[i - 1] == n - s + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw InternalError("oracle: deleting every vertex must leave a forest");
}

bool decide_fvs(const Graph& g, std::size_t k, const OracleBudget& budget) {
    return min_fvs_bruteforce(g, budget).size <= k;
}

int exact_treewidth(const Graph& g, const OracleBudget& budget) {
    const std::size_t n = g.num_vertices();
    if (n > budget.max_n_treewidth || n > 25) {
        throw ResourceError("exact_treewidth: n=" + std::to_string(n) + " exceeds budget " +
                            std::to_string(budget.max_n_treewidth));
    }
    if (n == 0) return -1;
    std::vector<Mask> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    // |Q(S, v)|: flood from v through S, count what lies outside S + v
    const auto q_size = [&](Mask s, std::size_t v) {
        Mask seen = Mask{1} << v;
        Mask frontier = seen;
        Mask outside = 0;
        while (frontier) {
            const auto x = static_cast<std::size_t>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            const Mask nb = adj[x] & ~seen;
            seen |= nb;
            outside |= nb & ~s;
            frontier |= nb & s;
        }
        return std::popcount(outside);
    };
    Deadline deadline(budget.time_cap);
    const Mask full = (Mask{1} << n) - 1;
    std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
    tw[0] = -1;
    for (Mask s = 1; s <= full; ++s) {
        deadline.check("exact_treewidth");
        int best = std::numeric_limits<int>::max();
        for (Mask rest = s; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            const Mask without = s & ~(Mask{1} << v);
            best = std::min(best, std::max(tw[without], q_size(without, v)));
        }
        tw[s] = best;
    }
    return tw[full];
}

}  // namespace udgfvs
