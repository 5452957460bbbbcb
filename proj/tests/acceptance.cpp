// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "support.hpp"
#include "udgfvs/bench.hpp"
#include "udgfvs/geometry.hpp"
#include "udgfvs/io.hpp"
#include "udgfvs/oracle.hpp"
#include "udgfvs/representative.hpp"
#include "udgfvs/solver.hpp"

using namespace udgfvs;
using namespace testing;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 10) failures.push_back(why);
    }
};

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// Criterion 1 corpus: unit disk graphs at the three pinned densities, a
// denser slice, and sparse arbitrary graphs.
std::vector<CorpusEntry> build_corpus(std::size_t* udg_count, std::size_t* arbitrary_count) {
    std::vector<CorpusEntry> corpus;
    const double densities[] = {0.05, 0.2, 0.5};
    for (std::uint64_t i = 0; i < 600; ++i) {
        const std::uint64_t seed = 1000 + i;
        Rng rng(seed);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(18));
        const double density = densities[i % 3];
        std::ostringstream name;
        name << "udg n=" << n << " density=" << density << " seed=" << seed;
        corpus.push_back({name.str(), build_intersection_graph(random_udg(n, density, seed))});
    }
    for (std::uint64_t i = 0; i < 300; ++i) {
        const std::uint64_t seed = 5000 + i;
        Rng rng(seed);
        const std::size_t n = 6 + static_cast<std::size_t>(rng.below(13));
        const double density = i % 2 ? 1.0 : 2.0;
        std::ostringstream name;
        name << "udg n=" << n << " density=" << density << " seed=" << seed;
        corpus.push_back({name.str(), build_intersection_graph(random_udg(n, density, seed))});
    }
    *udg_count = corpus.size();
    for (std::uint64_t i = 0; i < 250; ++i) {
        const std::uint64_t seed = 9000 + i;
        Rng rng(seed);
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(15));
        const std::size_t m = n / 2 + static_cast<std::size_t>(rng.below(2 * n - n / 2 + 1));
        std::ostringstream name;
        name << "arbitrary n=" << n << " m=" << m << " seed=" << seed;
        corpus.push_back({name.str(), random_graph(n, m, seed)});
    }
    *arbitrary_count = corpus.size() - *udg_count;
    return corpus;
}

struct EquivalenceResult {
    Outcome oracle_equivalence;
    Outcome mode_agreement;
};

EquivalenceResult check_equivalence(const std::vector<CorpusEntry>& corpus) {
    EquivalenceResult out;
    std::size_t solves = 0, yes_witnesses = 0;
    for (const auto& entry : corpus) {
        const Graph& g = entry.graph;
        const std::size_t n = g.num_vertices();
        const std::size_t opt = min_fvs_bruteforce(g).size;
        std::size_t optimum[2] = {0, 0};
        const SolveMode modes[] = {SolveMode::DpNaive, SolveMode::DpRank};
        for (int mi = 0; mi < 2; ++mi) {
            for (std::size_t k = 0; k <= n; ++k) {
                SolveConfig cfg;
                cfg.k = static_cast<std::int64_t>(k);
                cfg.mode = modes[mi];
                cfg.enable_thresholds = false;
                Solution s;
                try {
                    s = solve(g, cfg);
                } catch (const std::exception& e) {
                    out.oracle_equivalence.fail(entry.name + " k=" + std::to_string(k) + " " + mode_name(modes[mi]) +
                                                " threw: " + e.what());
                    continue;
                }
                ++solves;
                if (s.certificate != Certificate::Dp) {
                    out.oracle_equivalence.fail(entry.name + " k=" + std::to_string(k) + ": answered by " +
                                                certificate_name(s.certificate) + ", not the DP");
                }
                if (s.yes != (opt <= k)) {
                    out.oracle_equivalence.fail(entry.name + " k=" + std::to_string(k) + " " + mode_name(modes[mi]) +
                                                ": verdict differs from the oracle");
                }
                if (s.yes) {
                    if (s.fvs.size() > k || !forest_without(g, s.fvs)) {
                        out.oracle_equivalence.fail(entry.name + " k=" + std::to_string(k) + ": witness invalid");
                    } else {
                        ++yes_witnesses;
                    }
                }
                if (k == n) optimum[mi] = s.min_fvs.value_or(n + 1);
            }
        }
        if (optimum[0] != optimum[1]) {
            out.mode_agreement.fail(entry.name + ": dp-naive " + std::to_string(optimum[0]) + " vs dp-rank " +
                                    std::to_string(optimum[1]));
        }
        if (optimum[1] != opt) out.mode_agreement.fail(entry.name + ": optimum differs from the oracle");
    }
    out.oracle_equivalence.summary =
        std::to_string(solves) + " solves, " + std::to_string(yes_witnesses) + " witnesses verified";
    out.mode_agreement.summary = std::to_string(corpus.size()) + " instances";
    return out;
}

Outcome check_structure(const std::vector<CorpusEntry>& corpus, const std::vector<Graph>& planted) {
    Outcome out;
    std::size_t runs = 0, components = 0;
    auto check = [&](const std::string& name, const Graph& g) {
        const PipelineValidation v = validate_pipeline(g);
        ++runs;
        components += v.components;
        for (const auto& msg : v.violations) out.fail(name + ": " + msg);
    };
    for (const auto& e : corpus) check(e.name, e.graph);
    for (std::size_t i = 0; i < planted.size(); ++i) check("planted #" + std::to_string(i), planted[i]);
    out.summary = std::to_string(runs) + " pipeline runs, " + std::to_string(components) + " components";
    return out;
}

struct SweepResult {
    Outcome width;
    Outcome highdeg_fit;
    std::vector<Graph> graphs;
};

SweepResult check_sweep() {
    SweepResult out;
    BenchSpec spec;
    spec.family = BenchFamily::Planted;
    spec.ks = {4, 9, 16, 25, 36};
    spec.seeds = 20;
    spec.seed_base = 1;
    spec.mode = SolveMode::DpRank;
    const BenchReport r = run_bench(spec);
    const BenchAggregate& a = r.aggregate;
    for (const auto& row : r.rows) {
        const std::string tag = "k=" + std::to_string(row.k) + " seed=" + std::to_string(row.seed);
        if (row.verdict == "error") {
            out.width.fail(tag + ": " + row.error);
            continue;
        }
        if (row.verdict != "yes" || row.min_fvs != static_cast<long long>(row.k)) {
            out.width.fail(tag + ": planted instance not solved with exactly k deletions");
        }
        out.graphs.push_back(build_intersection_graph(planted_yes_instance(row.k, spec.path_len, row.seed).objects));
    }
    if (a.error_rows > 0) out.highdeg_fit.fail(std::to_string(a.error_rows) + " error rows");
    if (!(a.width_slope <= 0.7)) out.width.fail("log-log slope " + format_real(a.width_slope) + " > 0.7");
    // c and c1 are fitted over the whole sweep, so they bound every row by
    // construction; the slopes are what can fail. A count linear in k has
    // slope 1.
    if (!(a.highdeg_slope <= 1.1)) out.highdeg_fit.fail("log-log slope of the count " + format_real(a.highdeg_slope) + " > 1.1");
    int max_width = 0;
    std::size_t max_hd = 0;
    for (const auto& row : r.rows) {
        max_width = std::max(max_width, row.weighted_width);
        max_hd = std::max(max_hd, row.high_degree_count);
    }
    std::ostringstream w;
    w << r.rows.size() << " instances, slope " << format_real(std::round(a.width_slope * 1e4) / 1e4) << ", c "
      << format_real(std::round(a.width_coeff * 1e4) / 1e4) << ", max width " << max_width;
    out.width.summary = w.str();
    std::ostringstream h;
    h << "slope " << format_real(std::round(a.highdeg_slope * 1e4) / 1e4) << ", c1 "
      << format_real(std::round(a.highdeg_coeff * 1e4) / 1e4) << ", max count " << max_hd;
    out.highdeg_fit.summary = h.str();
    return out;
}

// Heavy cells need one deletion each, so whenever they outnumber k the
// answer must be no; confirmed by the oracle on small dense instances.
void check_heavy_cells(Outcome& out) {
    std::size_t checked = 0, instances = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Rng rng(seed * 31);
        const std::size_t n = 8 + static_cast<std::size_t>(rng.below(11));
        const double density = 1.5 + 2.5 * rng.uniform();
        const ObjectSet objs = random_udg(n, density, seed);
        const std::size_t heavy = classify_grid(objs).heavy_cells.size();
        if (heavy == 0) continue;
        ++instances;
        const Graph g = build_intersection_graph(objs);
        for (std::size_t k = 0; k < heavy; ++k) {
            ++checked;
            if (decide_fvs(g, k)) out.fail("seed " + std::to_string(seed) + ": heavy cells " + std::to_string(heavy) + " but oracle says yes at k=" + std::to_string(k));
        }
    }
    if (checked == 0) out.fail("no instance with heavy cells generated");
    out.summary += "; heavy-cell check on " + std::to_string(instances) + " instances, " + std::to_string(checked) + " (instance, k) pairs";
}

Outcome check_rank() {
    Outcome out;
    Rng rng(20240601);
    std::size_t complements = 0, max_rows = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const TableCase tc = random_table(rng, 6);
        const RepresentativeTable reduced = rank_reduce({{}, tc.rows, false});
        max_rows = std::max(max_rows, reduced.rows.size());
        if (reduced.rows.size() > (std::size_t{1} << (tc.s - 1))) {
            out.fail("trial " + std::to_string(trial) + ": " + std::to_string(reduced.rows.size()) + " rows over s=" + std::to_string(tc.s));
        }
        for (const auto& q : all_partitions(tc.s)) {
            ++complements;
            if (best_against(reduced.rows, q) != best_against(tc.rows, q)) {
                out.fail("trial " + std::to_string(trial) + ": optimum lost for some complement");
            }
        }
    }
    out.summary = "1000 tables, " + std::to_string(complements) + " complements, max rows " + std::to_string(max_rows);
    return out;
}

Outcome check_treewidth(const std::vector<CorpusEntry>& corpus) {
    Outcome out;
    std::size_t graphs = 0;
    auto widths = [](const Graph& g) {
        return std::vector<int>{ordering_width(g, min_degree_ordering(g)), ordering_width(g, min_fill_ordering(g)),
                                decompose_unweighted(g).width()};
    };
    for (const auto& e : corpus) {
        if (e.graph.num_vertices() > 12 || e.graph.num_vertices() == 0) continue;
        ++graphs;
        const int exact = exact_treewidth(e.graph);
        for (int w : widths(e.graph)) {
            if (w < exact) out.fail(e.name + ": heuristic width " + std::to_string(w) + " below exact " + std::to_string(exact));
        }
    }
    auto named = [&](const std::string& name, const Graph& g, int expect) {
        ++graphs;
        const int exact = exact_treewidth(g);
        if (exact != expect) out.fail(name + ": exact treewidth " + std::to_string(exact));
        for (int w : widths(g)) {
            if (w != expect) out.fail(name + ": heuristic width " + std::to_string(w) + ", expected " + std::to_string(expect));
        }
    };
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) named("tree n=" + std::to_string(n), random_tree(n, seed), 1);
        named("path n=" + std::to_string(n), path_graph(n), 1);
        named("star n=" + std::to_string(n), star_graph(n - 1), 1);
    }
    for (std::size_t n = 3; n <= 12; ++n) named("cycle n=" + std::to_string(n), cycle_graph(n), 2);
    for (std::size_t n = 1; n <= 12; ++n) named("clique n=" + std::to_string(n), complete_graph(n), static_cast<int>(n) - 1);
    out.summary = std::to_string(graphs) + " graphs";
    return out;
}

Outcome check_determinism() {
    Outcome out;
    std::size_t files = 0;
    auto objects_text = [](const ObjectSet& s) {
        std::ostringstream os;
        write_objects(os, s);
        return os.str();
    };
    auto graph_text = [](const Graph& g) {
        std::ostringstream os;
        write_graph(os, g);
        return os.str();
    };
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const ObjectSet sets[2][2] = {{random_udg(60, 0.3, seed), random_udg(60, 0.3, seed)},
                                      {planted_yes_instance(seed % 12, 20, seed).objects, planted_yes_instance(seed % 12, 20, seed).objects}};
        for (const auto& pair : sets) {
            files += 2;
            const std::string pts = objects_text(pair[0]);
            if (pts != objects_text(pair[1])) out.fail("points file differs for seed " + std::to_string(seed));
            const Graph g = build_intersection_graph(pair[0]);
            const std::string gtext = graph_text(g);
            if (gtext != graph_text(build_intersection_graph(pair[1]))) out.fail("graph file differs for seed " + std::to_string(seed));

            std::istringstream pin(pts);
            if (objects_text(read_objects(pin)) != pts) out.fail("points round trip differs, seed " + std::to_string(seed));
            std::istringstream gin(gtext);
            if (graph_text(read_graph(gin)) != gtext) out.fail("graph round trip differs, seed " + std::to_string(seed));

            const Graph h = peel_degree_one(g).reduced;
            if (h.num_vertices() == 0) continue;
            const ComponentPipeline pl = build_pipeline(h);
            std::ostringstream tdo;
            write_decomposition(tdo, pl.td, pl.contracted.base.num_vertices());
            std::istringstream tdi(tdo.str());
            std::size_t n = 0;
            const TreeDecomposition back = read_decomposition(tdi, &n);
            std::ostringstream tdo2;
            write_decomposition(tdo2, back, n);
            if (tdo2.str() != tdo.str()) out.fail("decomposition round trip differs, seed " + std::to_string(seed));
            ++files;
        }
    }
    BenchSpec spec;
    spec.ks = {4, 9};
    spec.seeds = 5;
    spec.path_len = 20;
    if (bench_csv(run_bench(spec)) != bench_csv(run_bench(spec))) out.fail("planted bench CSV differs across runs");
    spec.family = BenchFamily::Udg;
    spec.udg_n = 40;
    if (bench_csv(run_bench(spec)) != bench_csv(run_bench(spec))) out.fail("udg bench CSV differs across runs");
    out.summary = std::to_string(files) + " files, 2 bench reruns";
    return out;
}

bool report(int id, const std::string& title, const Outcome& o, double seconds) {
    std::printf("criterion %d [%s]: %s (%s; %.1fs)\n", id, title.c_str(), o.pass ? "PASS" : "FAIL", o.summary.c_str(), seconds);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    return o.pass;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main() {
    bool all = true;
    std::size_t udg = 0, arbitrary = 0;
    const std::vector<CorpusEntry> corpus = build_corpus(&udg, &arbitrary);
    std::printf("corpus: %zu unit disk graphs, %zu arbitrary graphs\n", udg, arbitrary);

    auto t = std::chrono::steady_clock::now();
    const EquivalenceResult eq = check_equivalence(corpus);
    const double t_eq = seconds_since(t);
    all &= report(1, "oracle equivalence", eq.oracle_equivalence, t_eq);
    all &= report(2, "mode agreement", eq.mode_agreement, t_eq);

    t = std::chrono::steady_clock::now();
    SweepResult sweep = check_sweep();
    const double t_sweep = seconds_since(t);

    t = std::chrono::steady_clock::now();
    const Outcome structure = check_structure(corpus, sweep.graphs);
    all &= report(3, "structural validity", structure, seconds_since(t));

    all &= report(4, "width scaling", sweep.width, t_sweep);
    t = std::chrono::steady_clock::now();
    check_heavy_cells(sweep.highdeg_fit);
    all &= report(5, "high-degree bound", sweep.highdeg_fit, seconds_since(t));

    t = std::chrono::steady_clock::now();
    all &= report(6, "rank-reduction representativeness", check_rank(), seconds_since(t));

    t = std::chrono::steady_clock::now();
    all &= report(7, "treewidth heuristic sanity", check_treewidth(corpus), seconds_since(t));

    t = std::chrono::steady_clock::now();
    all &= report(8, "determinism and IO", check_determinism(), seconds_since(t));

    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
