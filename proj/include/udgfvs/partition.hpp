#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "udgfvs/graph.hpp"

namespace udgfvs {

using Clique = std::vector<Vertex>;

// Partition of V(G) into connected classes, each covered by a few cliques.
struct KappaPartition {
    std::vector<std::vector<Vertex>> classes;        // sorted members
    std::vector<int> class_of;                       // vertex -> class index
    std::vector<Vertex> center_of;                   // class -> seed vertex
    std::vector<std::vector<Clique>> clique_cover;   // class -> cliques partitioning it

    std::size_t size() const { return classes.size(); }
    std::size_t kappa_observed() const;
};

// Class-level graph with weights ceil(log2 |P_i|) + 1.
struct ContractedGraph {
    Graph base;
    std::vector<int> weight;
    std::vector<std::size_t> class_size;
    // For every contracted edge (i, j), i < j, in base.edges() order: one
    // original edge (u, v) with u in P_i and v in P_j.
    std::vector<Edge> witness;

    int total_weight() const;
};

struct PartitionConfig {
    std::size_t kappa_bound = 6;
    std::size_t delta_bound = 40;
};

struct PartitionReport {
    std::vector<std::string> violations;
    std::size_t kappa_observed = 0;
    std::size_t max_contraction_degree = 0;
    std::size_t class_count = 0;

    bool ok() const { return violations.empty(); }
};

// ceil(log2 size) + 1, size >= 1.
int class_weight(std::size_t size);

// Stars around a maximal independent set picked greedily in non-increasing
// degree order (ties: smaller id). Each non-seed vertex joins the class of
// its earliest-processed seed neighbour.
KappaPartition greedy_partition(const Graph& g);

// Greedy clique cover of one class, grown from the smallest uncovered id.
std::vector<Clique> cover_class_cliques(const Graph& g, const std::vector<Vertex>& members);

// Builds class_of, centers (smallest member) and clique covers for arbitrary
// classes. Used for handcrafted partitions; does not validate.
KappaPartition partition_from_classes(const Graph& g, std::vector<std::vector<Vertex>> classes);

// Throws InputError if the partition is not a connected covering partition.
ContractedGraph contract(const Graph& g, const KappaPartition& p);

PartitionReport validate_partition(const Graph& g, const KappaPartition& p,
                                   const PartitionConfig& cfg = {});

// Violations of the contraction invariants: edge iff crossing edge, witness
// edges really cross, weight law exact.
std::vector<std::string> check_contraction(const Graph& g, const KappaPartition& p,
                                           const ContractedGraph& cg);

}  // namespace udgfvs
