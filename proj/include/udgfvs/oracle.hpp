#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "udgfvs/graph.hpp"

namespace udgfvs {

struct OracleBudget {
    std::size_t max_n_subsets = 20;
    std::size_t max_n_treewidth = 12;
    std::chrono::milliseconds time_cap{60000};
};

struct OracleFvs {
    std::size_t size = 0;
    std::vector<Vertex> witness;  // lexicographically first minimum FVS
};

// Tries deletion sets by increasing size, each size in lexicographic order.
// Throws ResourceError beyond the budget.
OracleFvs min_fvs_bruteforce(const Graph& g, const OracleBudget& budget = {});

bool decide_fvs(const Graph& g, std::size_t k, const OracleBudget& budget = {});

// Exact treewidth by dynamic programming over vertex subsets:
// TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is the set
// of vertices outside S + v reachable from v through S.
int exact_treewidth(const Graph& g, const OracleBudget& budget = {});

}  // namespace udgfvs
