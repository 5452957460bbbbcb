#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace udgfvs {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected simple graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;

    // Duplicates and both orientations collapse to one edge.
    // Throws InputError on out-of-range ids or self-loops.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool empty() const { return adjacency_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

// Graph together with the mapping from its vertex ids back to a parent graph.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // local id -> parent id
    std::vector<Vertex> from_parent;  // parent id -> local id, or -1
};

struct PeelResult {
    Graph reduced;
    std::vector<Vertex> kept;     // reduced id -> original id
    std::vector<Vertex> removed;  // original ids, in removal order
};

// Iterated deletion of vertices of degree <= 1 until the fixpoint. Vertices
// of degree 0 go as well: they lie on no cycle.
PeelResult peel_degree_one(const Graph& g);

bool is_forest(const Graph& g);

// True iff g minus the given vertices is a forest.
bool is_forest_without(const Graph& g, std::span<const Vertex> deleted);

std::size_t count_high_degree(const Graph& g);

// Induced subgraph on s (any order, duplicates ignored); local ids follow
// increasing parent id.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// Component index per vertex, components numbered by smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

}  // namespace udgfvs
