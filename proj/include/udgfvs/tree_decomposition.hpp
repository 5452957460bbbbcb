#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "udgfvs/graph.hpp"
#include "udgfvs/partition.hpp"

namespace udgfvs {

using Bag = std::vector<Vertex>;  // sorted

// Tree of bags, rooted at node 0.
struct TreeDecomposition {
    std::vector<Bag> bags;
    std::vector<std::vector<int>> tree;  // node adjacency

    std::size_t num_nodes() const { return bags.size(); }
    std::size_t max_bag_size() const;
    int width() const { return static_cast<int>(max_bag_size()) - 1; }
    void add_tree_edge(int a, int b);

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct DecompositionReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks vertex coverage, edge coverage and the connected-subtree property,
// plus that the node graph is a tree.
DecompositionReport validate_decomposition(const TreeDecomposition& td, const Graph& g);

// Max bag weight under per-vertex weights.
int weighted_width(const TreeDecomposition& td, const std::vector<int>& weight);
inline int weighted_width(const TreeDecomposition& td, const ContractedGraph& cg) {
    return weighted_width(td, cg.weight);
}

struct BlowupGraph {
    Graph graph;
    std::vector<Vertex> member_of;              // blown vertex -> class vertex
    std::vector<std::vector<Vertex>> members;   // class vertex -> its clique B(v)
};

// Replace every class vertex v by a clique of weight(v) vertices joined to the
// cliques of all neighbours of v.
BlowupGraph blowup(const ContractedGraph& cg);

enum class Effort { MinDegree, MinFill, Best };

const char* effort_name(Effort e);

// Elimination ordering -> decomposition (bag = vertex plus its higher
// neighbours in the fill graph). The decomposition of a disconnected graph
// links component roots into one tree.
TreeDecomposition decomposition_from_ordering(const Graph& h, const std::vector<Vertex>& order);

std::vector<Vertex> min_degree_ordering(const Graph& h);
std::vector<Vertex> min_fill_ordering(const Graph& h);

// Width of the decomposition an ordering induces.
int ordering_width(const Graph& h, const std::vector<Vertex>& order);

// Exact branch and bound over elimination orderings for graphs of at most
// 64 vertices. Starts from `incumbent`; returns an ordering no worse than it.
// Stops after node_budget search nodes (the result is then not necessarily
// optimal; *optimal reports which).
std::vector<Vertex> branch_and_bound_ordering(const Graph& h, std::vector<Vertex> incumbent,
                                              std::size_t node_budget, bool* optimal = nullptr);

constexpr std::size_t kExactRefinementLimit = 30;

// Heuristic decomposition; for at most kExactRefinementLimit vertices the
// best heuristic ordering is refined by branch and bound.
TreeDecomposition decompose_unweighted(const Graph& h, Effort effort = Effort::Best);

// Keep class vertex v in a bag iff the blowup bag holds all of B(v).
// Throws InternalError if the result is not a decomposition of cg.
TreeDecomposition project(const TreeDecomposition& td_blowup, const BlowupGraph& bg, const ContractedGraph& cg);

enum class NiceKind { Leaf, Introduce, Forget, Join };

const char* nice_kind_name(NiceKind k);

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    Vertex vertex = -1;         // introduced / forgotten vertex
    std::vector<int> children;  // 0, 1 or 2
    Bag bag;
};

// Rooted nice decomposition. Nodes are stored children-before-parent, so
// index order is a valid bottom-up evaluation order; the root is last and has
// an empty bag.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    std::size_t size() const { return nodes.size(); }
    TreeDecomposition as_tree_decomposition() const;
};

NiceDecomposition make_nice(const TreeDecomposition& td);

// Node-kind invariants on top of validate_decomposition.
DecompositionReport validate_nice(const NiceDecomposition& nd, const Graph& g);

}  // namespace udgfvs
