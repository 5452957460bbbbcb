#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "udgfvs/geometry.hpp"
#include "udgfvs/graph.hpp"
#include "udgfvs/rng.hpp"

namespace testing {

using udgfvs::Edge;
using udgfvs::Graph;
using udgfvs::Vertex;

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return make_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return make_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return make_graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
    return make_graph(leaves + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    return make_graph(a + b, e);
}

// Random tree by attaching each vertex to an earlier one.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    udgfvs::Rng rng(seed);
    std::vector<Edge> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v));
    return make_graph(n, e);
}

// Random simple graph with exactly m distinct edges (m capped at n choose 2).
inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    udgfvs::Rng rng(seed);
    std::vector<Edge> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    rng.shuffle(all.begin(), all.end());
    all.resize(std::min(m, all.size()));
    return make_graph(n, all);
}

// Cycle detection by depth-first search, independent of the union-find code.
inline bool has_cycle_dfs(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<int> parent(n, -2);
    for (std::size_t s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        std::vector<Vertex> stack{static_cast<Vertex>(s)};
        parent[s] = -1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (w == parent[static_cast<std::size_t>(v)]) continue;
                if (parent[static_cast<std::size_t>(w)] != -2) return true;
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    return false;
}

inline bool forest_without(const Graph& g, const std::vector<Vertex>& deleted) {
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (std::find(deleted.begin(), deleted.end(), static_cast<Vertex>(v)) == deleted.end()) keep.push_back(static_cast<Vertex>(v));
    }
    return !has_cycle_dfs(udgfvs::induced_subgraph(g, keep).graph);
}

// Minimum FVS by scanning all 2^n subsets in order of popcount, written
// separately from the library oracle.
inline std::size_t min_fvs_reference(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) continue;
        std::vector<Vertex> del;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1u) del.push_back(static_cast<Vertex>(v));
        if (forest_without(g, del)) best = size;
    }
    return best;
}

// O(n^2) intersection graph.
inline Graph all_pairs_graph(const udgfvs::ObjectSet& objs) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            if (udgfvs::objects_intersect(objs.objects[i], objs.objects[j]))
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return make_graph(objs.size(), e);
}

}  // namespace testing
