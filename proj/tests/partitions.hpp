#pragma once

#include <cstdint>
#include <vector>

#include "udgfvs/representative.hpp"
#include "udgfvs/rng.hpp"

namespace testing {

// Every set partition of {0..s-1} as canonical labels (restricted growth strings).
inline std::vector<udgfvs::BlockLabels> all_partitions(std::size_t s) {
    std::vector<udgfvs::BlockLabels> out;
    udgfvs::BlockLabels cur(s, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint8_t used) -> void {
        if (i == s) {
            out.push_back(cur);
            return;
        }
        for (std::uint8_t b = 0; b <= used && b < 255; ++b) {
            cur[i] = b;
            self(self, i + 1, b == used ? static_cast<std::uint8_t>(used + 1) : used);
        }
    };
    if (s == 0) return {udgfvs::BlockLabels{}};
    cur[0] = 0;
    rec(rec, 1, 1);
    return out;
}

// Does gluing a forest with blocks a to one with blocks b close a cycle?
// Written as a plain union-find over block ids, independent of glue_acyclic.
inline bool glue_ok(const udgfvs::BlockLabels& a, const udgfvs::BlockLabels& b) {
    const std::size_t s = a.size();
    std::vector<std::size_t> parent(2 * s);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Each element links block a[i] with block s + b[i]; a cycle in this
    // bipartite block graph is a cycle in the glued forest.
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t x = find(a[i]), y = find(s + b[i]);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

struct TableCase {
    std::size_t s = 0;
    std::vector<udgfvs::TableRow> rows;
};

inline TableCase random_table(udgfvs::Rng& rng, std::size_t max_s) {
    TableCase tc;
    tc.s = 1 + static_cast<std::size_t>(rng.below(max_s));
    const auto parts = all_partitions(tc.s);
    const std::size_t count = 1 + static_cast<std::size_t>(rng.below(2 * parts.size()));
    for (std::size_t i = 0; i < count; ++i) {
        tc.rows.push_back({parts[static_cast<std::size_t>(rng.below(parts.size()))], static_cast<int>(rng.below(6))});
    }
    return tc;
}

// min value over rows gluing acyclically with q, or -1 if none does.
inline int best_against(const std::vector<udgfvs::TableRow>& rows, const udgfvs::BlockLabels& q) {
    int best = -1;
    for (const auto& r : rows) {
        if (glue_ok(r.blocks, q) && (best < 0 || r.value < best)) best = r.value;
    }
    return best;
}

}  // namespace testing
