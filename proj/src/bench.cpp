#include "udgfvs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "udgfvs/errors.hpp"
#include "udgfvs/geometry.hpp"
#include "udgfvs/io.hpp"

namespace udgfvs {

const char* family_name(BenchFamily f) {
    switch (f) {
        case BenchFamily::Planted: return "planted";
        case BenchFamily::Udg: return "udg";
        case BenchFamily::Forest: return "forest";
    }
    return "?";
}

BenchFamily parse_family(const std::string& name) {
    if (name == "planted") return BenchFamily::Planted;
    if (name == "udg") return BenchFamily::Udg;
    if (name == "forest") return BenchFamily::Forest;
    throw InputError("unknown bench family '" + name + "'");
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    if (x.size() < 2) return 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
}

namespace {

BenchRow run_instance(const BenchSpec& spec, std::size_t k, std::uint64_t seed) {
    BenchRow row;
    row.family = family_name(spec.family);
    row.k = k;
    row.seed = seed;
    row.mode = spec.run_solver ? mode_name(spec.mode) : "none";
    const auto start = std::chrono::steady_clock::now();
    try {
        ObjectSet objs;
        switch (spec.family) {
            case BenchFamily::Planted: objs = planted_yes_instance(k, spec.path_len, seed).objects; break;
            case BenchFamily::Forest: objs = planted_yes_instance(0, spec.path_len, seed).objects; break;
            case BenchFamily::Udg: objs = random_udg(spec.udg_n, spec.density, seed); break;
        }
        const Graph g = build_intersection_graph(objs);
        row.n = g.num_vertices();
        row.m = g.num_edges();
        row.heavy_cells = classify_grid(objs).heavy_cells.size();
        const PeelResult peel = peel_degree_one(g);
        row.peeled_n = peel.reduced.num_vertices();
        row.high_degree_count = count_high_degree(peel.reduced);

        // widths and class statistics come from the pipeline with thresholds off
        int comps = 0;
        const auto comp = connected_components(peel.reduced, &comps);
        std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(comps));
        for (std::size_t v = 0; v < comp.size(); ++v) members[static_cast<std::size_t>(comp[v])].push_back(static_cast<Vertex>(v));
        for (const auto& mem : members) {
            const auto pl = build_pipeline(induced_subgraph(peel.reduced, mem).graph);
            row.weighted_width = std::max(row.weighted_width, pl.weighted_width);
            row.class_count += pl.partition.classes.size();
            row.kappa_observed = std::max(row.kappa_observed, pl.partition.kappa_observed());
        }

        if (spec.run_solver) {
            SolveConfig cfg;
            cfg.k = static_cast<std::int64_t>(spec.family == BenchFamily::Forest ? 0 : k);
            cfg.mode = spec.mode;
            cfg.enable_thresholds = spec.thresholds;
            cfg.geometric = true;
            const Solution sol = solve(g, cfg);
            row.verdict = sol.yes ? "yes" : "no";
            row.certificate = certificate_name(sol.certificate);
            if (sol.min_fvs) row.min_fvs = static_cast<long long>(*sol.min_fvs);
        } else {
            row.verdict = "skipped";
        }
    } catch (const std::exception& e) {
        row.verdict = "error";
        row.error = e.what();
    }
    row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

BenchAggregate aggregate_rows(const std::vector<BenchRow>& rows) {
    BenchAggregate agg;
    agg.rows = rows.size();
    std::vector<double> wx, wy, hx, hy;
    for (const auto& r : rows) {
        if (r.verdict == "error") {
            ++agg.error_rows;
            continue;
        }
        if (r.k == 0) continue;
        const double k = static_cast<double>(r.k);
        agg.width_coeff = std::max(agg.width_coeff, r.weighted_width / std::sqrt(k));
        agg.highdeg_coeff = std::max(agg.highdeg_coeff, static_cast<double>(r.high_degree_count) / k);
        if (r.weighted_width > 0) {
            wx.push_back(std::log(k));
            wy.push_back(std::log(static_cast<double>(r.weighted_width)));
        }
        if (r.high_degree_count > 0) {
            hx.push_back(std::log(k));
            hy.push_back(std::log(static_cast<double>(r.high_degree_count)));
        }
    }
    agg.width_slope = fit_slope(wx, wy);
    agg.highdeg_slope = fit_slope(hx, hy);
    return agg;
}

BenchReport run_bench(const BenchSpec& spec) {
    BenchReport report;
    report.spec = spec;
    for (std::size_t k : spec.ks) {
        for (std::size_t i = 0; i < spec.seeds; ++i) report.rows.push_back(run_instance(spec, k, spec.seed_base + i));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return a.k != b.k ? a.k < b.k : a.seed < b.seed;
    });
    report.aggregate = aggregate_rows(report.rows);
    return report;
}

std::string bench_csv(const BenchReport& report, bool include_timings) {
    std::ostringstream os;
    os << "family,k,seed,n,m,peeled_n,weighted_width,high_degree_count,heavy_cells,class_count,kappa_observed,"
          "verdict,certificate,min_fvs,mode,error";
    if (include_timings) os << ",wall_time";
    os << '\n';
    for (const auto& r : report.rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        os << r.family << ',' << r.k << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.peeled_n << ','
           << r.weighted_width << ',' << r.high_degree_count << ',' << r.heavy_cells << ',' << r.class_count << ','
           << r.kappa_observed << ',' << r.verdict << ',' << r.certificate << ',' << r.min_fvs << ',' << r.mode
           << ',' << err;
        if (include_timings) os << ',' << format_real(r.wall_time);
        os << '\n';
    }
    return os.str();
}

std::string bench_json(const BenchReport& report) {
    using nlohmann::json;
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"family", r.family},
                        {"k", r.k},
                        {"seed", r.seed},
                        {"n", r.n},
                        {"m", r.m},
                        {"peeled_n", r.peeled_n},
                        {"weighted_width", r.weighted_width},
                        {"high_degree_count", r.high_degree_count},
                        {"heavy_cells", r.heavy_cells},
                        {"class_count", r.class_count},
                        {"kappa_observed", r.kappa_observed},
                        {"verdict", r.verdict},
                        {"certificate", r.certificate},
                        {"min_fvs", r.min_fvs},
                        {"mode", r.mode},
                        {"wall_time", r.wall_time},
                        {"error", r.error}});
    }
    const auto& a = report.aggregate;
    const auto& s = report.spec;
    json out = {{"schema", 1},
                {"sweep",
                 {{"family", family_name(s.family)},
                  {"ks", s.ks},
                  {"seeds", s.seeds},
                  {"seed_base", s.seed_base},
                  {"path_len", s.path_len},
                  {"udg_n", s.udg_n},
                  {"density", s.density},
                  {"run_solver", s.run_solver},
                  {"mode", mode_name(s.mode)},
                  {"thresholds", s.thresholds}}},
                {"aggregate",
                 {{"rows", a.rows},
                  {"error_rows", a.error_rows},
                  {"width_slope", a.width_slope},
                  {"width_coeff", a.width_coeff},
                  {"highdeg_slope", a.highdeg_slope},
                  {"highdeg_coeff", a.highdeg_coeff}}},
                {"rows", rows}};
    return out.dump(2) + "\n";
}

}  // namespace udgfvs
