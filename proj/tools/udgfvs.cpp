#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "udgfvs/bench.hpp"
#include "udgfvs/errors.hpp"
#include "udgfvs/geometry.hpp"
#include "udgfvs/io.hpp"
#include "udgfvs/oracle.hpp"
#include "udgfvs/solver.hpp"

using nlohmann::json;
using namespace udgfvs;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw InputError("bad list entry '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

json timings_json(const std::map<std::string, double>& t) {
    json out = json::object();
    for (const auto& [k, v] : t) out[k] = v;
    return out;
}

void print_fvs_text(const std::vector<Vertex>& fvs) {
    std::cout << "fvs";
    for (Vertex v : fvs) std::cout << ' ' << v;
    std::cout << '\n';
}

struct GenArgs {
    bool udg = false;
    bool planted = false;
    std::size_t n = 50;
    double density = 0.2;
    std::size_t k = 4;
    std::size_t path_len = 0;
    std::uint64_t seed = 1;
    std::string out = "instance";
};

int cmd_gen(const GenArgs& a) {
    if (a.udg == a.planted) throw InputError("gen needs exactly one of --udg or --planted");
    ObjectSet objs;
    json summary;
    if (a.udg) {
        objs = random_udg(a.n, a.density, a.seed);
        summary["family"] = "udg";
        summary["density"] = a.density;
    } else {
        const PlantedInstance inst = planted_yes_instance(a.k, a.path_len, a.seed);
        objs = inst.objects;
        summary["family"] = "planted";
        summary["k"] = inst.k;
        summary["hubs"] = inst.hubs;
    }
    const Graph g = build_intersection_graph(objs);
    std::ostringstream pts, gr;
    write_objects(pts, objs);
    write_graph(gr, g);
    save_text(a.out + ".points", pts.str());
    save_text(a.out + ".graph", gr.str());
    summary["schema"] = 1;
    summary["seed"] = a.seed;
    summary["n"] = g.num_vertices();
    summary["m"] = g.num_edges();
    summary["points"] = a.out + ".points";
    summary["graph"] = a.out + ".graph";
    std::cout << summary.dump(2) << '\n';
    return 0;
}

struct SolveArgs {
    std::string input;
    long long k = -1;
    std::string mode = "auto";
    bool no_thresholds = false;
    bool json_out = false;
    std::string td_out;
};

int cmd_solve(const SolveArgs& a) {
    if (a.k < 0) throw InputError("--k must be non-negative");
    const Instance inst = load_instance(a.input);
    SolveConfig cfg;
    cfg.k = a.k;
    cfg.mode = parse_mode(a.mode);
    cfg.enable_thresholds = !a.no_thresholds;
    cfg.geometric = inst.objects.has_value();
    const Solution sol = solve(inst.graph, cfg);
    if (!a.td_out.empty()) {
        // decomposition of the contraction of the largest peeled component
        const Graph peeled = peel_degree_one(inst.graph).reduced;
        std::ostringstream os;
        if (peeled.num_vertices() > 0) {
            int count = 0;
            const auto comp = connected_components(peeled, &count);
            std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
            for (std::size_t v = 0; v < comp.size(); ++v) members[static_cast<std::size_t>(comp[v])].push_back(static_cast<Vertex>(v));
            std::size_t best = 0;
            for (std::size_t c = 1; c < members.size(); ++c) {
                if (members[c].size() > members[best].size()) best = c;
            }
            const ComponentPipeline pl = build_pipeline(induced_subgraph(peeled, members[best]).graph, cfg.effort);
            write_decomposition(os, pl.td, pl.contracted.base.num_vertices());
        } else {
            write_decomposition(os, TreeDecomposition{{Bag{}}, {{}}}, 0);
        }
        save_text(a.td_out, os.str());
    }
    if (a.json_out) {
        json out = {{"schema", 1},
                    {"verdict", sol.yes ? "yes" : "no"},
                    {"k", a.k},
                    {"fvs", sol.fvs},
                    {"certificate", certificate_name(sol.certificate)},
                    {"weighted_width", sol.weighted_width},
                    {"high_degree_count", sol.high_degree_count},
                    {"class_count", sol.class_count},
                    {"kappa_observed", sol.kappa_observed},
                    {"timings", timings_json(sol.timings)}};
        out["min_fvs"] = sol.min_fvs ? json(*sol.min_fvs) : json(nullptr);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (sol.yes ? "yes" : "no") << '\n';
        if (sol.yes) print_fvs_text(sol.fvs);
    }
    return sol.yes ? kExitYes : kExitNo;
}

struct OracleArgs {
    std::string input;
    long long k = -1;
    bool json_out = false;
    std::size_t max_n = 20;
};

int cmd_oracle(const OracleArgs& a) {
    if (a.k < 0) throw InputError("--k must be non-negative");
    const Instance inst = load_instance(a.input);
    OracleBudget budget;
    budget.max_n_subsets = a.max_n;
    const OracleFvs o = min_fvs_bruteforce(inst.graph, budget);
    const bool yes = o.size <= static_cast<std::size_t>(a.k);
    if (a.json_out) {
        json out = {{"schema", 1},
                    {"verdict", yes ? "yes" : "no"},
                    {"k", a.k},
                    {"fvs", yes ? o.witness : std::vector<Vertex>{}},
                    {"certificate", "oracle"},
                    {"min_fvs", o.size}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (yes ? "yes" : "no") << '\n';
        if (yes) print_fvs_text(o.witness);
    }
    return yes ? kExitYes : kExitNo;
}

int cmd_validate(const std::string& input) {
    const Instance inst = load_instance(input);
    const PipelineValidation v = validate_pipeline(inst.graph);
    json out = {{"schema", 1},
                {"violations", v.violations},
                {"kappa_observed", v.kappa_observed},
                {"max_contraction_degree", v.max_contraction_degree},
                {"class_count", v.class_count},
                {"components", v.components},
                {"weighted_width", v.weighted_width}};
    std::cout << out.dump(2) << '\n';
    return v.ok() ? 0 : 1;
}

struct CompareArgs {
    std::string input;
    long long k = -1;  // -1: every k in 0..n
    std::size_t max_n = 20;
};

int cmd_compare(const CompareArgs& a) {
    const Instance inst = load_instance(a.input);
    const Graph& g = inst.graph;
    const std::size_t n = g.num_vertices();
    std::optional<std::size_t> oracle_size;
    if (n <= a.max_n) {
        OracleBudget budget;
        budget.max_n_subsets = a.max_n;
        oracle_size = min_fvs_bruteforce(g, budget).size;
    }
    std::vector<long long> ks;
    if (a.k >= 0) {
        ks.push_back(a.k);
    } else {
        for (std::size_t k = 0; k <= n; ++k) ks.push_back(static_cast<long long>(k));
    }
    bool agree = true;
    json rows = json::array();
    for (long long k : ks) {
        json row = {{"k", k}};
        std::optional<bool> first;
        auto note = [&](bool verdict) {
            if (first && *first != verdict) agree = false;
            first = verdict;
        };
        for (SolveMode m : {SolveMode::DpNaive, SolveMode::DpRank}) {
            SolveConfig cfg;
            cfg.k = k;
            cfg.mode = m;
            cfg.enable_thresholds = false;
            const Solution sol = solve(g, cfg);
            row[mode_name(m)] = {{"verdict", sol.yes ? "yes" : "no"},
                                 {"min_fvs", sol.min_fvs ? json(*sol.min_fvs) : json(nullptr)}};
            note(sol.yes);
        }
        if (oracle_size) {
            const bool yes = *oracle_size <= static_cast<std::size_t>(k);
            row["oracle"] = {{"verdict", yes ? "yes" : "no"}, {"min_fvs", *oracle_size}};
            note(yes);
        }
        rows.push_back(row);
    }
    json out = {{"schema", 1}, {"n", n}, {"m", g.num_edges()}, {"agree", agree}, {"rows", rows}};
    std::cout << out.dump(2) << '\n';
    return agree ? 0 : 1;
}

struct BenchArgs {
    std::string family = "planted";
    std::string ks = "4,9,16,25,36";
    std::size_t seeds = 20;
    std::uint64_t seed_base = 1;
    std::size_t path_len = 40;
    std::size_t udg_n = 60;
    double density = 0.2;
    bool no_solve = false;
    bool thresholds = false;
    std::string mode = "dp-rank";
    std::string csv;
    std::string json_path;
    bool timings = false;
};

int cmd_bench(const BenchArgs& a) {
    BenchSpec spec;
    spec.family = parse_family(a.family);
    spec.ks = parse_list(a.ks);
    spec.seeds = a.seeds;
    spec.seed_base = a.seed_base;
    spec.path_len = a.path_len;
    spec.udg_n = a.udg_n;
    spec.density = a.density;
    spec.run_solver = !a.no_solve;
    spec.thresholds = a.thresholds;
    spec.mode = parse_mode(a.mode);
    const BenchReport report = run_bench(spec);
    const std::string csv = bench_csv(report, a.timings);
    if (a.csv.empty()) {
        std::cout << csv;
    } else {
        save_text(a.csv, csv);
    }
    if (!a.json_path.empty()) save_text(a.json_path, bench_json(report));
    const auto& agg = report.aggregate;
    std::cerr << "rows " << agg.rows << ", errors " << agg.error_rows << ", width slope "
              << format_real(agg.width_slope) << ", c " << format_real(agg.width_coeff) << ", c1 "
              << format_real(agg.highdeg_coeff) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feedback vertex set on geometric intersection graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate an instance (points file and graph file)");
    g->add_flag("--udg", gen.udg, "Random unit disk graph");
    g->add_flag("--planted", gen.planted, "Planted yes-instance with k disjoint triangles");
    g->add_option("-n", gen.n, "Number of disks (--udg)");
    g->add_option("--density", gen.density, "Disks per unit area (--udg)");
    g->add_option("-k", gen.k, "Number of hubs (--planted)");
    g->add_option("--path-len", gen.path_len, "Minimum path length (--planted)");
    g->add_option("--seed", gen.seed, "Instance seed");
    g->add_option("--out", gen.out, "Output prefix");

    SolveArgs solve_args;
    auto* s = app.add_subcommand("solve", "Decide whether an FVS of size at most k exists");
    s->add_option("input", solve_args.input, "Graph or points file")->required();
    s->add_option("--k", solve_args.k, "Budget")->required();
    s->add_option("--mode", solve_args.mode, "auto|dp-naive|dp-rank|oracle");
    s->add_flag("--no-thresholds", solve_args.no_thresholds, "Disable threshold no-certificates");
    s->add_flag("--json", solve_args.json_out, "JSON output");
    s->add_option("--td", solve_args.td_out, "Write the decomposition of the largest component");

    OracleArgs oracle_args;
    auto* o = app.add_subcommand("oracle", "Brute-force minimum FVS");
    o->add_option("input", oracle_args.input, "Graph or points file")->required();
    o->add_option("--k", oracle_args.k, "Budget")->required();
    o->add_flag("--json", oracle_args.json_out, "JSON output");
    o->add_option("--max-n", oracle_args.max_n, "Refuse larger inputs");

    std::string validate_input;
    auto* v = app.add_subcommand("validate", "Validate the partition and decompositions");
    v->add_option("input", validate_input, "Graph or points file")->required();

    CompareArgs compare_args;
    auto* c = app.add_subcommand("compare", "Compare dp-naive, dp-rank and the oracle");
    c->add_option("input", compare_args.input, "Graph or points file")->required();
    c->add_option("--k", compare_args.k, "Budget (default: every k)");
    c->add_option("--max-n", compare_args.max_n, "Largest n for the oracle");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Width and high-degree sweep");
    b->add_option("--family", bench.family, "planted|udg|forest");
    b->add_option("--ks", bench.ks, "Comma separated k values");
    b->add_option("--seeds", bench.seeds, "Seeds per k");
    b->add_option("--seed-base", bench.seed_base, "First seed");
    b->add_option("--path-len", bench.path_len, "Minimum path length (planted, forest)");
    b->add_option("-n", bench.udg_n, "Disks per instance (udg)");
    b->add_option("--density", bench.density, "Density (udg)");
    b->add_flag("--no-solve", bench.no_solve, "Only measure, skip the solver");
    b->add_flag("--thresholds", bench.thresholds, "Enable threshold certificates");
    b->add_option("--mode", bench.mode, "Solver mode");
    b->add_option("--csv", bench.csv, "CSV output path (default stdout)");
    b->add_option("--json", bench.json_path, "JSON report path");
    b->add_flag("--timings", bench.timings, "Add a wall_time column to the CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*s) return cmd_solve(solve_args);
        if (*o) return cmd_oracle(oracle_args);
        if (*v) return cmd_validate(validate_input);
        if (*c) return cmd_compare(compare_args);
        if (*b) return cmd_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
