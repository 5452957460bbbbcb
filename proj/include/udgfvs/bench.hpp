#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udgfvs/solver.hpp"

namespace udgfvs {

enum class BenchFamily { Planted, Udg, Forest };

const char* family_name(BenchFamily f);
BenchFamily parse_family(const std::string& name);

struct BenchSpec {
    BenchFamily family = BenchFamily::Planted;
    std::vector<std::size_t> ks{4, 9, 16, 25, 36};
    std::size_t seeds = 20;            // instances per k: seed_base, seed_base+1, ...
    std::uint64_t seed_base = 1;
    std::size_t path_len = 40;         // planted / forest
    std::size_t udg_n = 60;            // udg
    double density = 0.2;              // udg
    bool run_solver = true;
    SolveMode mode = SolveMode::DpRank;
    bool thresholds = false;
};

struct BenchRow {
    std::string family;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t peeled_n = 0;
    int weighted_width = 0;
    std::size_t high_degree_count = 0;
    std::size_t heavy_cells = 0;
    std::size_t class_count = 0;
    std::size_t kappa_observed = 0;
    std::string verdict;      // yes, no, skipped or error
    std::string certificate;
    long long min_fvs = -1;
    std::string mode;
    double wall_time = 0;
    std::string error;
};

struct BenchAggregate {
    std::size_t rows = 0;
    std::size_t error_rows = 0;
    double width_slope = 0;    // least squares slope of log(width) on log(k)
    double width_coeff = 0;    // c: smallest constant with width <= c sqrt(k) on every row
    double highdeg_slope = 0;  // least squares slope of log(count) on log(k)
    double highdeg_coeff = 0;  // c1: smallest constant with count <= c1 k on every row
};

struct BenchReport {
    BenchSpec spec;
    std::vector<BenchRow> rows;  // sorted by (k, seed)
    BenchAggregate aggregate;
};

// Never throws for a single instance: failures become error rows.
BenchReport run_bench(const BenchSpec& spec);

BenchAggregate aggregate_rows(const std::vector<BenchRow>& rows);

// Fixed column set; wall_time only when include_timings is set, so that
// reruns produce byte-identical files by default.
std::string bench_csv(const BenchReport& report, bool include_timings = false);
std::string bench_json(const BenchReport& report);

// Least-squares slope of y on x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace udgfvs
