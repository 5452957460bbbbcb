#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udgfvs/graph.hpp"
#include "udgfvs/partition.hpp"
#include "udgfvs/representative.hpp"
#include "udgfvs/tree_decomposition.hpp"

namespace udgfvs {

enum class SolveMode { Auto, DpNaive, DpRank, Oracle };

const char* mode_name(SolveMode m);
SolveMode parse_mode(const std::string& name);

struct SolveConfig {
    std::int64_t k = 0;
    SolveMode mode = SolveMode::Auto;
    // No-certificates fire when weighted width > width_coeff * sqrt(k) or the
    // peeled high-degree count > highdeg_coeff * k. They are only sound for
    // intersection graphs of similarly sized fat objects, so they need both
    // enable_thresholds and geometric provenance of the input.
    double width_threshold_coeff = 12.0;
    double highdeg_threshold_coeff = 16.0;
    bool enable_thresholds = true;
    bool geometric = false;
    std::uint64_t seed = 0;  // recorded only; the pipeline is deterministic
    int safety_width_cap = 64;
    std::size_t max_rows_per_node = 2'000'000;
    std::size_t oracle_fallback_n = 20;
    Effort effort = Effort::Best;

    void validate() const;
};

enum class Certificate { Dp, WidthThreshold, HighDegreeThreshold, Oracle };

const char* certificate_name(Certificate c);

struct DpStats {
    std::size_t nice_nodes = 0;
    std::size_t max_rows = 0;
    std::size_t total_rows = 0;
    std::size_t rows_dropped_by_rank = 0;
    std::size_t edges_processed = 0;
};

struct Solution {
    bool yes = false;
    std::vector<Vertex> fvs;  // present iff yes; original vertex ids, sorted
    Certificate certificate = Certificate::Dp;
    std::optional<std::size_t> min_fvs;  // known when every component was optimized
    int weighted_width = 0;              // max over peeled components
    std::size_t high_degree_count = 0;   // after peeling
    std::size_t class_count = 0;
    std::size_t kappa_observed = 0;
    std::size_t max_contraction_degree = 0;
    DpStats dp;
    std::map<std::string, double> timings;  // seconds per phase
};

// Full pipeline: peel, per component partition/contract/decompose, optional
// threshold certificates, DP, reconstruction. Every yes answer is re-verified.
Solution solve(const Graph& g, const SolveConfig& cfg);

// No-certificate if the peeled graph has more than coeff * k vertices of
// degree >= 3.
bool quick_reject_highdeg(const Graph& g_peeled, std::int64_t k, double coeff);

// All subsets of a class keeping at most two vertices of every cover clique,
// ordered by size, then lexicographically.
std::vector<std::vector<Vertex>> local_selections(const std::vector<Vertex>& cls, const std::vector<Clique>& cover);

// Per-component intermediate objects of the pipeline.
struct ComponentPipeline {
    Graph graph;                   // the component, local ids
    std::vector<Vertex> to_parent;
    KappaPartition partition;
    ContractedGraph contracted;
    BlowupGraph blown;
    TreeDecomposition blowup_td;
    TreeDecomposition td;          // over contracted vertices
    int weighted_width = 0;
};

ComponentPipeline build_pipeline(const Graph& component, Effort effort = Effort::Best);

struct PipelineValidation {
    std::vector<std::string> violations;  // each prefixed by the failing stage
    std::size_t components = 0;
    std::size_t class_count = 0;
    std::size_t kappa_observed = 0;
    std::size_t max_contraction_degree = 0;
    int weighted_width = 0;

    bool ok() const { return violations.empty(); }
};

// Peels g and checks every component: partition, contraction, the blowup
// decomposition, the projected decomposition and its nice form.
PipelineValidation validate_pipeline(const Graph& g, Effort effort = Effort::Best, const PartitionConfig& cfg = {});

enum class DpEngine { Naive, Rank };

struct DpRow {
    std::vector<Vertex> kept;  // sorted original ids kept inside the bag
    BlockLabels blocks;        // connectivity of kept, canonical labels
    int value = 0;             // deletions among forgotten vertices
    int from_a = -1;           // row index in the (first) child table
    int from_b = -1;           // row index in the second child table (join)
};

// Per-node tables, indexed like nd.nodes; rows of a table are sorted by
// (kept, blocks).
struct DpTables {
    std::vector<std::vector<DpRow>> tables;
    int best_row = -1;  // row of the root table with the fewest deletions
    int min_deletions = 0;
    DpStats stats;
};

// Dynamic programming over a nice decomposition of the contraction of (g, p).
// Throws ResourceError if a node exceeds max_rows, InternalError if the
// decomposition does not account for every edge exactly once.
DpTables dp_run(const NiceDecomposition& nd, const Graph& g, const KappaPartition& p, DpEngine engine,
                std::size_t max_rows = 2'000'000);

// Back-traces the optimal root row into a minimum deletion set (sorted ids of
// g) and checks it: right size, and g minus it is a forest.
std::vector<Vertex> reconstruct(const DpTables& dp, const NiceDecomposition& nd, const Graph& g,
                                const KappaPartition& p);

}  // namespace udgfvs
