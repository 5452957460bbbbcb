#include "udgfvs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "udgfvs/errors.hpp"
#include "udgfvs/oracle.hpp"
#include "udgfvs/union_find.hpp"

namespace udgfvs {

const char* mode_name(SolveMode m) {
    switch (m) {
        case SolveMode::Auto: return "auto";
        case SolveMode::DpNaive: return "dp-naive";
        case SolveMode::DpRank: return "dp-rank";
        case SolveMode::Oracle: return "oracle";
    }
    return "?";
}

SolveMode parse_mode(const std::string& name) {
    if (name == "auto") return SolveMode::Auto;
    if (name == "dp-naive") return SolveMode::DpNaive;
    if (name == "dp-rank") return SolveMode::DpRank;
    if (name == "oracle") return SolveMode::Oracle;
    throw InputError("unknown mode '" + name + "'");
}

const char* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::Dp: return "dp";
        case Certificate::WidthThreshold: return "width-threshold";
        case Certificate::HighDegreeThreshold: return "highdeg-threshold";
        case Certificate::Oracle: return "oracle";
    }
    return "?";
}

void SolveConfig::validate() const {
    if (k < 0) throw InputError("k must be >= 0");
    if (!(width_threshold_coeff > 0) || !(highdeg_threshold_coeff > 0)) {
        throw InputError("threshold coefficients must be > 0");
    }
}

bool quick_reject_highdeg(const Graph& g_peeled, std::int64_t k, double coeff) {
    return static_cast<double>(count_high_degree(g_peeled)) > coeff * static_cast<double>(k);
}

std::vector<std::vector<Vertex>> local_selections(const std::vector<Vertex>& cls, const std::vector<Clique>& cover) {
    (void)cls;
    std::vector<std::vector<Vertex>> out{{}};
    for (const auto& clique : cover) {
        std::vector<std::vector<Vertex>> picks{{}};
        for (std::size_t i = 0; i < clique.size(); ++i) {
            picks.push_back({clique[i]});
            for (std::size_t j = i + 1; j < clique.size(); ++j) picks.push_back({clique[i], clique[j]});
        }
        std::vector<std::vector<Vertex>> next;
        next.reserve(out.size() * picks.size());
        for (const auto& base : out) {
            for (const auto& pick : picks) {
                auto s = base;
                s.insert(s.end(), pick.begin(), pick.end());
                next.push_back(std::move(s));
            }
        }
        out = std::move(next);
    }
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

ComponentPipeline build_pipeline(const Graph& component, Effort effort) {
    ComponentPipeline pl;
    pl.graph = component;
    pl.partition = greedy_partition(component);
    pl.contracted = contract(component, pl.partition);
    pl.blown = blowup(pl.contracted);
    pl.blowup_td = decompose_unweighted(pl.blown.graph, effort);
    pl.td = project(pl.blowup_td, pl.blown, pl.contracted);
    pl.weighted_width = weighted_width(pl.td, pl.contracted);
    return pl;
}

PipelineValidation validate_pipeline(const Graph& g, Effort effort, const PartitionConfig& cfg) {
    PipelineValidation out;
    const Graph peeled = peel_degree_one(g).reduced;
    int count = 0;
    const auto comp = connected_components(peeled, &count);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < comp.size(); ++v) members[static_cast<std::size_t>(comp[v])].push_back(static_cast<Vertex>(v));
    out.components = members.size();
    auto add = [&](const std::string& stage, std::size_t c, const std::vector<std::string>& vs) {
        for (const auto& v : vs) out.violations.push_back(stage + "[" + std::to_string(c) + "]: " + v);
    };
    for (std::size_t c = 0; c < members.size(); ++c) {
        const Graph h = induced_subgraph(peeled, members[c]).graph;
        try {
            const KappaPartition p = greedy_partition(h);
            const PartitionReport pr = validate_partition(h, p, cfg);
            add("partition", c, pr.violations);
            out.class_count += pr.class_count;
            out.kappa_observed = std::max(out.kappa_observed, pr.kappa_observed);
            out.max_contraction_degree = std::max(out.max_contraction_degree, pr.max_contraction_degree);
            if (!pr.ok()) continue;
            const ContractedGraph cg = contract(h, p);
            add("contraction", c, check_contraction(h, p, cg));
            const BlowupGraph bg = blowup(cg);
            const TreeDecomposition btd = decompose_unweighted(bg.graph, effort);
            add("blowup_td", c, validate_decomposition(btd, bg.graph).violations);
            const TreeDecomposition td = project(btd, bg, cg);
            add("td", c, validate_decomposition(td, cg.base).violations);
            const NiceDecomposition nd = make_nice(td);
            add("nice", c, validate_nice(nd, cg.base).violations);
            out.weighted_width = std::max(out.weighted_width, weighted_width(td, cg));
        } catch (const std::exception& e) {
            out.violations.push_back("pipeline[" + std::to_string(c) + "]: " + e.what());
        }
    }
    return out;
}

namespace {

bool rows_less(const DpRow& a, const DpRow& b) {
    if (a.kept != b.kept) return a.kept < b.kept;
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.value < b.value;
}

std::size_t position(const std::vector<Vertex>& sorted, Vertex v) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return it != sorted.end() && *it == v ? static_cast<std::size_t>(it - sorted.begin()) : sorted.size();
}

// Does g[vertices] contain a cycle?
bool induces_cycle(const Graph& g, const std::vector<Vertex>& vertices) {
    UnionFind uf(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (w <= vertices[i]) continue;
            const std::size_t j = position(vertices, w);
            if (j < vertices.size() && !uf.unite(i, j)) return true;
        }
    }
    return false;
}

class DpRunner {
public:
    DpRunner(const NiceDecomposition& nd, const Graph& g, const KappaPartition& p, DpEngine engine,
             std::size_t max_rows)
        : nd_(nd), g_(g), p_(p), engine_(engine), max_rows_(max_rows) {
        for (std::size_t c = 0; c < p.size(); ++c) {
            std::vector<std::vector<Vertex>> sels;
            for (auto& s : local_selections(p.classes[c], p.clique_cover[c])) {
                if (!induces_cycle(g, s)) sels.push_back(std::move(s));
            }
            selections_.push_back(std::move(sels));
        }
    }

    DpTables run() {
        DpTables out;
        out.tables.resize(nd_.nodes.size());
        std::size_t edges_seen = 0;
        for (std::size_t x = 0; x < nd_.nodes.size(); ++x) {
            const NiceNode& node = nd_.nodes[x];
            std::vector<DpRow> rows;
            switch (node.kind) {
                case NiceKind::Leaf:
                    rows.push_back(DpRow{});
                    break;
                case NiceKind::Introduce:
                    rows = introduce(out.tables[static_cast<std::size_t>(node.children[0])], node.vertex);
                    break;
                case NiceKind::Forget: {
                    const auto& child = nd_.nodes[static_cast<std::size_t>(node.children[0])];
                    edges_seen += edges_at_forget(child.bag, node.vertex);
                    rows = forget(out.tables[static_cast<std::size_t>(node.children[0])], node.vertex);
                    break;
                }
                case NiceKind::Join:
                    rows = join(out.tables[static_cast<std::size_t>(node.children[0])],
                                out.tables[static_cast<std::size_t>(node.children[1])]);
                    break;
            }
            finish(rows, out.stats);
            out.tables[x] = std::move(rows);
        }
        if (edges_seen != g_.num_edges()) {
            throw InternalError("dp: processed " + std::to_string(edges_seen) + " edges, graph has " +
                                std::to_string(g_.num_edges()));
        }
        out.stats.edges_processed = edges_seen;
        out.stats.nice_nodes = nd_.nodes.size();
        const auto& root = out.tables.at(static_cast<std::size_t>(nd_.root));
        for (std::size_t i = 0; i < root.size(); ++i) {
            if (out.best_row < 0 || root[i].value < out.min_deletions) {
                out.best_row = static_cast<int>(i);
                out.min_deletions = root[i].value;
            }
        }
        if (out.best_row < 0) throw InternalError("dp: empty root table");
        return out;
    }

private:
    const std::vector<Vertex>& members(Vertex cls) const { return p_.classes[static_cast<std::size_t>(cls)]; }

    void check_rows(std::size_t count) const {
        if (count > max_rows_) {
            throw ResourceError("dp: node table exceeds " + std::to_string(max_rows_) + " rows");
        }
    }

    // Edges handled when forgetting cls: inside cls, and to the other classes still in the bag.
    std::size_t edges_at_forget(const Bag& child_bag, Vertex cls) const {
        std::size_t count = 0;
        for (Vertex a : members(cls)) {
            for (Vertex b : g_.neighbors(a)) {
                const int other = p_.class_of[static_cast<std::size_t>(b)];
                if (other == cls) {
                    if (a < b) ++count;
                } else if (std::binary_search(child_bag.begin(), child_bag.end(), other)) {
                    ++count;
                }
            }
        }
        return count;
    }

    std::vector<DpRow> introduce(const std::vector<DpRow>& child, Vertex cls) const {
        std::vector<DpRow> out;
        const auto& sels = selections_[static_cast<std::size_t>(cls)];
        for (std::size_t lo = 0; lo < child.size();) {
            std::size_t hi = lo;
            while (hi < child.size() && child[hi].kept == child[lo].kept) ++hi;
            const auto& kept = child[lo].kept;
            for (const auto& sel : sels) {
                std::vector<Vertex> merged;
                merged.reserve(kept.size() + sel.size());
                std::merge(kept.begin(), kept.end(), sel.begin(), sel.end(), std::back_inserter(merged));
                if (merged.size() > 255) throw ResourceError("dp: more than 255 kept vertices in a bag");
                if (induces_cycle(g_, merged)) continue;
                for (std::size_t r = lo; r < hi; ++r) {
                    DpRow row;
                    row.kept = merged;
                    row.blocks.resize(merged.size());
                    std::uint8_t fresh = static_cast<std::uint8_t>(block_count(child[r].blocks));
                    for (std::size_t i = 0, j = 0; i < merged.size(); ++i) {
                        if (j < kept.size() && kept[j] == merged[i]) {
                            row.blocks[i] = child[r].blocks[j++];
                        } else {
                            row.blocks[i] = fresh++;
                        }
                    }
                    canonicalize(row.blocks);
                    row.value = child[r].value;
                    row.from_a = static_cast<int>(r);
                    out.push_back(std::move(row));
                }
                check_rows(out.size());
            }
            lo = hi;
        }
        return out;
    }

    std::vector<DpRow> forget(const std::vector<DpRow>& child, Vertex cls) const {
        std::vector<DpRow> out;
        const int class_size = static_cast<int>(members(cls).size());
        for (std::size_t r = 0; r < child.size(); ++r) {
            const DpRow& in = child[r];
            const std::size_t s = in.kept.size();
            UnionFind uf(s);
            std::vector<int> first(256, -1);
            for (std::size_t i = 0; i < s; ++i) {
                auto& f = first[in.blocks[i]];
                if (f < 0) f = static_cast<int>(i);
                else uf.unite(static_cast<std::size_t>(f), i);
            }
            std::vector<char> leaving(s, 0);
            bool acyclic = true;
            int kept_here = 0;
            for (std::size_t i = 0; i < s && acyclic; ++i) {
                const Vertex a = in.kept[i];
                if (p_.class_of[static_cast<std::size_t>(a)] != cls) continue;
                leaving[i] = 1;
                ++kept_here;
                for (Vertex b : g_.neighbors(a)) {
                    if (p_.class_of[static_cast<std::size_t>(b)] == cls && b < a) continue;
                    const std::size_t j = position(in.kept, b);
                    if (j == s) continue;
                    if (!uf.unite(i, j)) {
                        acyclic = false;
                        break;
                    }
                }
            }
            if (!acyclic) continue;
            DpRow row;
            for (std::size_t i = 0; i < s; ++i) {
                if (leaving[i]) continue;
                row.kept.push_back(in.kept[i]);
                row.blocks.push_back(static_cast<std::uint8_t>(uf.find(i)));
            }
            canonicalize(row.blocks);
            row.value = in.value + class_size - kept_here;
            row.from_a = static_cast<int>(r);
            out.push_back(std::move(row));
        }
        return out;
    }

    std::vector<DpRow> join(const std::vector<DpRow>& left, const std::vector<DpRow>& right) const {
        std::vector<DpRow> out;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < left.size() && j < right.size()) {
            if (left[i].kept < right[j].kept) {
                ++i;
                continue;
            }
            if (right[j].kept < left[i].kept) {
                ++j;
                continue;
            }
            std::size_t i_end = i;
            while (i_end < left.size() && left[i_end].kept == left[i].kept) ++i_end;
            std::size_t j_end = j;
            while (j_end < right.size() && right[j_end].kept == right[j].kept) ++j_end;
            for (std::size_t a = i; a < i_end; ++a) {
                for (std::size_t b = j; b < j_end; ++b) {
                    auto glued = glue_acyclic(left[a].blocks, right[b].blocks);
                    if (!glued) continue;
                    DpRow row;
                    row.kept = left[a].kept;
                    row.blocks = std::move(*glued);
                    row.value = left[a].value + right[b].value;
                    row.from_a = static_cast<int>(a);
                    row.from_b = static_cast<int>(b);
                    out.push_back(std::move(row));
                }
                check_rows(out.size());
            }
            i = i_end;
            j = j_end;
        }
        return out;
    }

    // Sort, drop duplicate partitions, and in rank mode keep a representative subset.
    void finish(std::vector<DpRow>& rows, DpStats& stats) const {
        std::sort(rows.begin(), rows.end(), rows_less);
        std::vector<DpRow> unique;
        unique.reserve(rows.size());
        for (auto& row : rows) {
            if (!unique.empty() && unique.back().kept == row.kept && unique.back().blocks == row.blocks) continue;
            unique.push_back(std::move(row));
        }
        if (engine_ == DpEngine::Rank) {
            std::vector<DpRow> reduced;
            reduced.reserve(unique.size());
            for (std::size_t lo = 0; lo < unique.size();) {
                std::size_t hi = lo;
                while (hi < unique.size() && unique[hi].kept == unique[lo].kept) ++hi;
                if (hi - lo == 1) {
                    reduced.push_back(std::move(unique[lo]));
                } else {
                    std::vector<TableRow> group;
                    group.reserve(hi - lo);
                    for (std::size_t r = lo; r < hi; ++r) group.push_back({unique[r].blocks, unique[r].value});
                    const auto keep = representative_rows(group);
                    stats.rows_dropped_by_rank += group.size() - keep.size();
                    for (std::size_t idx : keep) reduced.push_back(std::move(unique[lo + idx]));
                }
                lo = hi;
            }
            unique = std::move(reduced);
        }
        stats.max_rows = std::max(stats.max_rows, unique.size());
        stats.total_rows += unique.size();
        rows = std::move(unique);
    }

    const NiceDecomposition& nd_;
    const Graph& g_;
    const KappaPartition& p_;
    DpEngine engine_;
    std::size_t max_rows_;
    std::vector<std::vector<std::vector<Vertex>>> selections_;
};

}  // namespace

DpTables dp_run(const NiceDecomposition& nd, const Graph& g, const KappaPartition& p, DpEngine engine,
                std::size_t max_rows) {
    if (nd.nodes.empty() || nd.root != static_cast<int>(nd.nodes.size()) - 1) {
        throw InternalError("dp: decomposition root must be the last node");
    }
    return DpRunner(nd, g, p, engine, max_rows).run();
}

std::vector<Vertex> reconstruct(const DpTables& dp, const NiceDecomposition& nd, const Graph& g,
                                const KappaPartition& p) {
    std::vector<char> kept(g.num_vertices(), 0);
    std::vector<std::pair<int, int>> stack{{nd.root, dp.best_row}};
    while (!stack.empty()) {
        const auto [x, r] = stack.back();
        stack.pop_back();
        const NiceNode& node = nd.nodes[static_cast<std::size_t>(x)];
        const DpRow& row = dp.tables[static_cast<std::size_t>(x)][static_cast<std::size_t>(r)];
        if (node.kind == NiceKind::Leaf) continue;
        const int a = node.children[0];
        stack.emplace_back(a, row.from_a);
        if (node.kind == NiceKind::Join) stack.emplace_back(node.children[1], row.from_b);
        if (node.kind == NiceKind::Forget) {
            const DpRow& below = dp.tables[static_cast<std::size_t>(a)][static_cast<std::size_t>(row.from_a)];
            for (Vertex v : below.kept) {
                if (p.class_of[static_cast<std::size_t>(v)] == node.vertex) kept[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    std::vector<Vertex> deletion;
    for (std::size_t v = 0; v < kept.size(); ++v) {
        if (!kept[v]) deletion.push_back(static_cast<Vertex>(v));
    }
    if (static_cast<int>(deletion.size()) != dp.min_deletions) {
        throw InternalError("reconstruct: deletion set size " + std::to_string(deletion.size()) +
                            " differs from dp optimum " + std::to_string(dp.min_deletions));
    }
    if (!is_forest_without(g, deletion)) throw InternalError("reconstruct: remaining graph has a cycle");
    return deletion;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Solution solve(const Graph& g, const SolveConfig& cfg) {
    cfg.validate();
    const auto t_total = Clock::now();
    Solution sol;
    const auto k = static_cast<std::size_t>(cfg.k);
    const auto finish_timing = [&] { sol.timings["total"] = seconds_since(t_total); };

    if (cfg.mode == SolveMode::Oracle) {
        OracleBudget budget;
        const auto t = Clock::now();
        const auto res = min_fvs_bruteforce(g, budget);
        sol.timings["oracle"] = seconds_since(t);
        sol.certificate = Certificate::Oracle;
        sol.min_fvs = res.size;
        sol.yes = res.size <= k;
        if (sol.yes) sol.fvs = res.witness;
        finish_timing();
        return sol;
    }

    auto t = Clock::now();
    const PeelResult peel = peel_degree_one(g);
    sol.high_degree_count = count_high_degree(peel.reduced);
    sol.timings["peel"] = seconds_since(t);
    const bool thresholds = cfg.enable_thresholds && cfg.geometric;

    if (thresholds && quick_reject_highdeg(peel.reduced, cfg.k, cfg.highdeg_threshold_coeff)) {
        sol.certificate = Certificate::HighDegreeThreshold;
        finish_timing();
        return sol;
    }

    int comp_count = 0;
    const auto comp = connected_components(peel.reduced, &comp_count);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(comp_count));
    for (std::size_t v = 0; v < comp.size(); ++v) members[static_cast<std::size_t>(comp[v])].push_back(static_cast<Vertex>(v));

    t = Clock::now();
    std::vector<ComponentPipeline> pipelines;
    pipelines.reserve(members.size());
    for (const auto& m : members) {
        Subgraph sub = induced_subgraph(peel.reduced, m);
        ComponentPipeline pl = build_pipeline(sub.graph, cfg.effort);
        pl.to_parent = std::move(sub.to_parent);
        sol.weighted_width = std::max(sol.weighted_width, pl.weighted_width);
        sol.class_count += pl.partition.size();
        sol.kappa_observed = std::max(sol.kappa_observed, pl.partition.kappa_observed());
        for (std::size_t c = 0; c < pl.contracted.base.num_vertices(); ++c) {
            sol.max_contraction_degree = std::max(sol.max_contraction_degree, pl.contracted.base.degree(static_cast<Vertex>(c)));
        }
        pipelines.push_back(std::move(pl));
    }
    sol.timings["decompose"] = seconds_since(t);

    if (thresholds &&
        static_cast<double>(sol.weighted_width) > cfg.width_threshold_coeff * std::sqrt(static_cast<double>(cfg.k))) {
        sol.certificate = Certificate::WidthThreshold;
        finish_timing();
        return sol;
    }

    t = Clock::now();
    const DpEngine engine = cfg.mode == SolveMode::DpNaive ? DpEngine::Naive : DpEngine::Rank;
    std::vector<Vertex> deletion;
    for (const auto& pl : pipelines) {
        std::vector<Vertex> local;
        bool fallback = pl.weighted_width > cfg.safety_width_cap;
        if (!fallback) {
            try {
                const NiceDecomposition nd = make_nice(pl.td);
                const DpTables dp = dp_run(nd, pl.graph, pl.partition, engine, cfg.max_rows_per_node);
                local = reconstruct(dp, nd, pl.graph, pl.partition);
                sol.dp.nice_nodes += dp.stats.nice_nodes;
                sol.dp.max_rows = std::max(sol.dp.max_rows, dp.stats.max_rows);
                sol.dp.total_rows += dp.stats.total_rows;
                sol.dp.rows_dropped_by_rank += dp.stats.rows_dropped_by_rank;
                sol.dp.edges_processed += dp.stats.edges_processed;
            } catch (const ResourceError&) {
                fallback = true;
            }
        }
        if (fallback) {
            if (pl.graph.num_vertices() > cfg.oracle_fallback_n) {
                throw ResourceError("component with " + std::to_string(pl.graph.num_vertices()) +
                                    " vertices and weighted width " + std::to_string(pl.weighted_width) +
                                    " exceeds the DP limits");
            }
            OracleBudget budget;
            budget.max_n_subsets = std::max(budget.max_n_subsets, cfg.oracle_fallback_n);
            local = min_fvs_bruteforce(pl.graph, budget).witness;
            sol.certificate = Certificate::Oracle;
        }
        for (Vertex v : local) {
            deletion.push_back(peel.kept[static_cast<std::size_t>(pl.to_parent[static_cast<std::size_t>(v)])]);
        }
    }
    sol.timings["dp"] = seconds_since(t);

    std::sort(deletion.begin(), deletion.end());
    sol.min_fvs = deletion.size();
    sol.yes = deletion.size() <= k;
    if (sol.yes) {
        if (!is_forest_without(g, deletion)) throw InternalError("solve: returned set is not a feedback vertex set");
        sol.fvs = std::move(deletion);
    }
    finish_timing();
    return sol;
}

}  // namespace udgfvs
