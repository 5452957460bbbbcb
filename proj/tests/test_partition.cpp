#include <doctest.h>

#include <cmath>
#include <set>

#include "support.hpp"
#include "udgfvs/errors.hpp"
#include "udgfvs/geometry.hpp"
#include "udgfvs/partition.hpp"

using namespace udgfvs;
using namespace testing;

namespace {

// Straight transcription of the procedure: repeatedly pick the unprocessed
// vertex of largest degree (smallest id on ties).
std::vector<std::vector<Vertex>> reference_partition(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> done(n, false), seed(n, false);
    std::vector<std::size_t> when(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (pick == n || g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(pick))) pick = v;
        }
        done[pick] = true;
        when[pick] = step;
        bool free = true;
        for (Vertex w : g.neighbors(static_cast<Vertex>(pick))) free = free && !seed[static_cast<std::size_t>(w)];
        seed[pick] = free;
    }
    std::vector<std::pair<std::size_t, std::vector<Vertex>>> by_time;
    for (std::size_t s = 0; s < n; ++s) {
        if (!seed[s]) continue;
        std::vector<Vertex> cls{static_cast<Vertex>(s)};
        for (std::size_t v = 0; v < n; ++v) {
            if (seed[v]) continue;
            std::size_t first = n;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
                if (seed[static_cast<std::size_t>(w)] && (first == n || when[static_cast<std::size_t>(w)] < when[first])) first = static_cast<std::size_t>(w);
            }
            if (first == s) cls.push_back(static_cast<Vertex>(v));
        }
        std::sort(cls.begin(), cls.end());
        by_time.emplace_back(when[s], cls);
    }
    std::sort(by_time.begin(), by_time.end());
    std::vector<std::vector<Vertex>> out;
    for (auto& [t, cls] : by_time) out.push_back(cls);
    return out;
}

}  // namespace

TEST_CASE("K5 is one class") {
    const KappaPartition p = greedy_partition(complete_graph(5));
    REQUIRE(p.classes.size() == 1);
    CHECK(p.classes[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(p.center_of[0] == 0);
    CHECK(p.clique_cover[0].size() == 1);
}

TEST_CASE("C6 greedy partition") {
    // Seeds 0, 2, 4. Vertex 5 is adjacent to seeds 0 and 4 and joins 0, the
    // earlier processed one.
    const Graph c6 = cycle_graph(6);
    const KappaPartition p = greedy_partition(c6);
    CHECK(p.center_of == std::vector<Vertex>{0, 2, 4});
    CHECK(p.classes == std::vector<std::vector<Vertex>>{{0, 1, 5}, {2, 3}, {4}});
    CHECK(p.classes == reference_partition(c6));
    const ContractedGraph cg = contract(c6, p);
    CHECK(cg.base == complete_graph(3));
    CHECK(cg.weight == std::vector<int>{3, 2, 1});
}

TEST_CASE("edgeless graph gives singletons") {
    const KappaPartition p = greedy_partition(make_graph(4, {}));
    CHECK(p.classes == std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}});
    CHECK(p.kappa_observed() == 1);
}

TEST_CASE("greedy partition matches the reference on random graphs") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t n = 1 + seed % 25;
        const Graph g = random_graph(n, (seed * 7) % (2 * n + 1), seed);
        const KappaPartition p = greedy_partition(g);
        CHECK(p.classes == reference_partition(g));
        CHECK(validate_partition(g, p, {1000, 1000}).ok());
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = build_intersection_graph(random_udg(60, 0.8, seed));
        CHECK(greedy_partition(g).classes == reference_partition(g));
    }
}

TEST_CASE("cover_class_cliques") {
    const Graph k4 = complete_graph(4);
    CHECK(cover_class_cliques(k4, {0, 1, 2, 3}) == std::vector<Clique>{{0, 1, 2, 3}});

    const Graph p3 = path_graph(3);
    CHECK(cover_class_cliques(p3, {0, 1, 2}) == std::vector<Clique>{{0, 1}, {2}});

    CHECK(cover_class_cliques(p3, {1}) == std::vector<Clique>{{1}});
}

TEST_CASE("cover cliques partition each class and are cliques") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Graph g = build_intersection_graph(random_udg(40, 1.0, seed));
        const KappaPartition p = greedy_partition(g);
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::vector<Vertex> covered;
            for (const auto& c : p.clique_cover[i]) {
                for (std::size_t a = 0; a < c.size(); ++a)
                    for (std::size_t b = a + 1; b < c.size(); ++b) CHECK(g.has_edge(c[a], c[b]));
                covered.insert(covered.end(), c.begin(), c.end());
            }
            std::sort(covered.begin(), covered.end());
            CHECK(covered == p.classes[i]);
        }
    }
}

TEST_CASE("class weight law") {
    CHECK(class_weight(1) == 1);
    CHECK(class_weight(2) == 2);
    CHECK(class_weight(3) == 3);
    CHECK(class_weight(4) == 3);
    CHECK(class_weight(5) == 4);
    CHECK(class_weight(8) == 4);
    CHECK(class_weight(9) == 5);
    for (std::size_t s = 1; s < 2000; ++s) {
        CHECK(class_weight(s) == static_cast<int>(std::ceil(std::log2(static_cast<double>(s)))) + 1);
    }
}

TEST_CASE("contract examples") {
    const Graph g = random_graph(10, 15, 3);
    std::vector<std::vector<Vertex>> singles;
    for (Vertex v = 0; v < 10; ++v) singles.push_back({v});
    const KappaPartition sp = partition_from_classes(g, singles);
    const ContractedGraph cs = contract(g, sp);
    CHECK(cs.base == g);
    CHECK(std::all_of(cs.weight.begin(), cs.weight.end(), [](int w) { return w == 1; }));

    const Graph c6 = cycle_graph(6);
    const KappaPartition pairs = partition_from_classes(c6, {{0, 1}, {2, 3}, {4, 5}});
    const ContractedGraph c3 = contract(c6, pairs);
    CHECK(c3.base == cycle_graph(3));
    CHECK(c3.weight == std::vector<int>{2, 2, 2});
    CHECK(c3.class_size == std::vector<std::size_t>{2, 2, 2});
    CHECK(check_contraction(c6, pairs, c3).empty());

    const Graph k5 = complete_graph(5);
    const ContractedGraph one = contract(k5, partition_from_classes(k5, {{0, 1, 2, 3, 4}}));
    CHECK(one.weight == std::vector<int>{4});
    CHECK(one.total_weight() == 4);
}

TEST_CASE("contract rejects invalid partitions") {
    const Graph p4 = path_graph(4);
    CHECK_THROWS_AS(contract(p4, partition_from_classes(p4, {{0, 2}, {1, 3}})), InputError);
    CHECK_THROWS_AS(contract(p4, partition_from_classes(p4, {{0, 1}, {2}})), InputError);
    CHECK_THROWS_AS(contract(p4, partition_from_classes(p4, {{0, 1}, {1, 2, 3}})), InputError);
}

TEST_CASE("validate_partition reports problems") {
    const Graph p4 = path_graph(4);
    const PartitionReport disconnected = validate_partition(p4, partition_from_classes(p4, {{0, 3}, {1, 2}}));
    CHECK_FALSE(disconnected.ok());
    bool mentions = false;
    for (const auto& v : disconnected.violations) mentions = mentions || v.find("connected") != std::string::npos;
    CHECK(mentions);

    const Graph g = random_graph(12, 20, 8);
    std::vector<std::vector<Vertex>> singles;
    for (Vertex v = 0; v < 12; ++v) singles.push_back({v});
    const PartitionReport ok = validate_partition(g, partition_from_classes(g, singles));
    CHECK(ok.ok());
    CHECK(ok.kappa_observed == 1);
    CHECK(ok.class_count == 12);

    KappaPartition bad = partition_from_classes(p4, {{0, 1, 2, 3}});
    bad.clique_cover[0] = {{0, 2}, {1}, {3}};
    CHECK_FALSE(validate_partition(p4, bad).ok());

    const KappaPartition big = partition_from_classes(p4, {{0, 1, 2, 3}});
    CHECK_FALSE(validate_partition(p4, big, {1, 40}).ok());
    CHECK(validate_partition(p4, big, {2, 40}).ok());
}

TEST_CASE("greedy partitions of unit disk graphs satisfy the configured bounds") {
    std::size_t max_kappa = 0, max_delta = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const double density = seed % 3 == 0 ? 0.05 : seed % 3 == 1 ? 0.2 : 0.5;
        const Graph g = build_intersection_graph(random_udg(10 + seed % 60, density * 4, seed));
        const KappaPartition p = greedy_partition(g);
        const PartitionReport r = validate_partition(g, p);
        CHECK(r.ok());
        for (const auto& v : r.violations) MESSAGE(v);
        CHECK(check_contraction(g, p, contract(g, p)).empty());
        max_kappa = std::max(max_kappa, r.kappa_observed);
        max_delta = std::max(max_delta, r.max_contraction_degree);
    }
    MESSAGE("observed kappa " << max_kappa << ", contraction degree " << max_delta);
}

TEST_CASE("check_contraction catches a wrong contraction") {
    const Graph c6 = cycle_graph(6);
    const KappaPartition pairs = partition_from_classes(c6, {{0, 1}, {2, 3}, {4, 5}});
    ContractedGraph cg = contract(c6, pairs);
    cg.weight[1] = 3;
    CHECK_FALSE(check_contraction(c6, pairs, cg).empty());
    ContractedGraph missing = contract(c6, pairs);
    missing.base = path_graph(3);
    CHECK_FALSE(check_contraction(c6, pairs, missing).empty());
}
