#include "udgfvs/graph.hpp"

#include <algorithm>
#include <string>

#include "udgfvs/errors.hpp"
#include "udgfvs/union_find.hpp"

namespace udgfvs {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    const auto in_range = [n](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    for (const auto& [u, v] : edges) {
        if (!in_range(u) || !in_range(v)) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        degree_sum += adj.size();
    }
    g.num_edges_ = degree_sum / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

PeelResult peel_degree_one(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> degree(n);
    std::vector<char> gone(n, 0);
    std::vector<Vertex> queue;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = g.degree(static_cast<Vertex>(v));
        if (degree[v] <= 1) {
            gone[v] = 1;
            queue.push_back(static_cast<Vertex>(v));
        }
    }
    // queue doubles as the removal log
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
            const auto wi = static_cast<std::size_t>(w);
            if (gone[wi]) continue;
            if (--degree[wi] <= 1) {
                gone[wi] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> survivors;
    for (std::size_t v = 0; v < n; ++v) {
        if (!gone[v]) survivors.push_back(static_cast<Vertex>(v));
    }
    Subgraph sub = induced_subgraph(g, survivors);
    return PeelResult{std::move(sub.graph), std::move(sub.to_parent), std::move(queue)};
}

bool is_forest(const Graph& g) {
    UnionFind uf(g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        if (!uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) return false;
    }
    return true;
}

bool is_forest_without(const Graph& g, std::span<const Vertex> deleted) {
    std::vector<char> dead(g.num_vertices(), 0);
    for (Vertex v : deleted) dead[static_cast<std::size_t>(v)] = 1;
    UnionFind uf(g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        if (dead[static_cast<std::size_t>(u)] || dead[static_cast<std::size_t>(v)]) continue;
        if (!uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) return false;
    }
    return true;
}

std::size_t count_high_degree(const Graph& g) {
    std::size_t count = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) >= 3) ++count;
    }
    return count;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    Subgraph sub;
    sub.from_parent.assign(g.num_vertices(), -1);
    std::vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        sub.from_parent[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> local_edges;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex w : g.neighbors(members[i])) {
            const Vertex j = sub.from_parent[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) local_edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    sub.graph = Graph::from_edge_list(members.size(), local_edges);
    sub.to_parent = std::move(members);
    return sub;
}

std::vector<int> connected_components(const Graph& g, int* count) {
    const std::size_t n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

}  // namespace udgfvs
