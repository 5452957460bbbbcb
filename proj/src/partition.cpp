#include "udgfvs/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "udgfvs/errors.hpp"

namespace udgfvs {

std::size_t KappaPartition::kappa_observed() const {
    std::size_t kappa = 0;
    for (const auto& cover : clique_cover) kappa = std::max(kappa, cover.size());
    return kappa;
}

int ContractedGraph::total_weight() const { return std::accumulate(weight.begin(), weight.end(), 0); }

int class_weight(std::size_t size) {
    if (size == 0) throw InputError("empty partition class");
    return static_cast<int>(std::bit_width(size - 1)) + 1;
}

KappaPartition greedy_partition(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[i])] = i;

    std::vector<char> is_seed(n, 0);
    for (Vertex v : order) {
        const auto nb = g.neighbors(v);
        const bool free = std::none_of(nb.begin(), nb.end(),
                                       [&](Vertex w) { return is_seed[static_cast<std::size_t>(w)]; });
        if (free) is_seed[static_cast<std::size_t>(v)] = 1;
    }

    // class indices follow processing order of the seeds
    std::vector<int> class_of_seed(n, -1);
    std::vector<std::vector<Vertex>> classes;
    std::vector<Vertex> centers;
    for (Vertex v : order) {
        if (!is_seed[static_cast<std::size_t>(v)]) continue;
        class_of_seed[static_cast<std::size_t>(v)] = static_cast<int>(classes.size());
        classes.push_back({v});
        centers.push_back(v);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (is_seed[v]) continue;
        Vertex best = -1;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            if (!is_seed[static_cast<std::size_t>(w)]) continue;
            if (best < 0 || rank[static_cast<std::size_t>(w)] < rank[static_cast<std::size_t>(best)]) best = w;
        }
        if (best < 0) throw InternalError("greedy_partition: non-seed vertex without seed neighbour");
        classes[static_cast<std::size_t>(class_of_seed[static_cast<std::size_t>(best)])].push_back(static_cast<Vertex>(v));
    }

    KappaPartition p = partition_from_classes(g, std::move(classes));
    p.center_of = std::move(centers);
    return p;
}

std::vector<Clique> cover_class_cliques(const Graph& g, const std::vector<Vertex>& members) {
    std::vector<Vertex> uncovered(members);
    std::sort(uncovered.begin(), uncovered.end());
    uncovered.erase(std::unique(uncovered.begin(), uncovered.end()), uncovered.end());
    std::vector<Clique> cover;
    while (!uncovered.empty()) {
        Clique clique{uncovered.front()};
        std::vector<Vertex> rest;
        for (std::size_t i = 1; i < uncovered.size(); ++i) {
            const Vertex c = uncovered[i];
            const bool joins = std::all_of(clique.begin(), clique.end(),
                                           [&](Vertex m) { return g.has_edge(m, c); });
            if (joins) {
                clique.push_back(c);
            } else {
                rest.push_back(c);
            }
        }
        cover.push_back(std::move(clique));
        uncovered = std::move(rest);
    }
    return cover;
}

KappaPartition partition_from_classes(const Graph& g, std::vector<std::vector<Vertex>> classes) {
    KappaPartition p;
    p.class_of.assign(g.num_vertices(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto& cls = classes[i];
        std::sort(cls.begin(), cls.end());
        for (Vertex v : cls) {
            if (v >= 0 && static_cast<std::size_t>(v) < g.num_vertices()) {
                p.class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
        p.center_of.push_back(cls.empty() ? -1 : cls.front());
        p.clique_cover.push_back(cover_class_cliques(g, cls));
    }
    p.classes = std::move(classes);
    return p;
}

namespace {

// Structural problems that make a partition unusable for contraction.
std::vector<std::string> structural_violations(const Graph& g, const KappaPartition& p) {
    std::vector<std::string> out;
    const std::size_t n = g.num_vertices();
    std::vector<int> seen(n, -1);
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& cls = p.classes[i];
        if (cls.empty()) {
            out.push_back("class " + std::to_string(i) + " is empty");
            continue;
        }
        for (Vertex v : cls) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                out.push_back("class " + std::to_string(i) + " holds out-of-range vertex " + std::to_string(v));
                continue;
            }
            auto& s = seen[static_cast<std::size_t>(v)];
            if (s >= 0) {
                out.push_back("vertex " + std::to_string(v) + " in classes " + std::to_string(s) + " and " +
                              std::to_string(i));
            }
            s = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v] < 0) out.push_back("vertex " + std::to_string(v) + " uncovered");
        else if (p.class_of.size() != n || p.class_of[v] != seen[v]) {
            out.push_back("class_of mismatch at vertex " + std::to_string(v));
        }
    }
    if (!out.empty()) return out;

    // connectivity of every class, BFS restricted to the class
    std::vector<int> mark(n, -1);
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& cls = p.classes[i];
        std::vector<Vertex> stack{cls.front()};
        mark[static_cast<std::size_t>(cls.front())] = static_cast<int>(i);
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (seen[wi] == static_cast<int>(i) && mark[wi] != static_cast<int>(i)) {
                    mark[wi] = static_cast<int>(i);
                    stack.push_back(w);
                    ++reached;
                }
            }
        }
        if (reached != cls.size()) out.push_back("class " + std::to_string(i) + " is disconnected");
    }
    return out;
}

}  // namespace

ContractedGraph contract(const Graph& g, const KappaPartition& p) {
    const auto problems = structural_violations(g, p);
    if (!problems.empty()) throw InputError("invalid partition: " + problems.front());

    std::map<Edge, Edge> crossing;  // class edge -> first original witness
    for (const auto& [u, v] : g.edges()) {
        int a = p.class_of[static_cast<std::size_t>(u)];
        int b = p.class_of[static_cast<std::size_t>(v)];
        if (a == b) continue;
        Edge witness{u, v};
        if (a > b) {
            std::swap(a, b);
            std::swap(witness.first, witness.second);
        }
        crossing.try_emplace(Edge{a, b}, witness);
    }
    std::vector<Edge> class_edges;
    ContractedGraph cg;
    for (const auto& [e, w] : crossing) {
        class_edges.push_back(e);
        cg.witness.push_back(w);
    }
    cg.base = Graph::from_edge_list(p.size(), class_edges);
    for (const auto& cls : p.classes) {
        cg.class_size.push_back(cls.size());
        cg.weight.push_back(class_weight(cls.size()));
    }
    return cg;
}

PartitionReport validate_partition(const Graph& g, const KappaPartition& p, const PartitionConfig& cfg) {
    PartitionReport report;
    report.class_count = p.size();
    report.violations = structural_violations(g, p);
    if (p.clique_cover.size() != p.classes.size()) {
        report.violations.push_back("clique cover count differs from class count");
        return report;
    }
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        std::vector<Vertex> covered;
        for (const auto& clique : p.clique_cover[i]) {
            for (std::size_t a = 0; a < clique.size(); ++a) {
                for (std::size_t b = a + 1; b < clique.size(); ++b) {
                    if (!g.has_edge(clique[a], clique[b])) {
                        report.violations.push_back("class " + std::to_string(i) + ": clique pair (" +
                                                    std::to_string(clique[a]) + "," + std::to_string(clique[b]) +
                                                    ") not adjacent");
                    }
                }
            }
            covered.insert(covered.end(), clique.begin(), clique.end());
        }
        std::sort(covered.begin(), covered.end());
        if (covered != p.classes[i]) {
            report.violations.push_back("class " + std::to_string(i) + ": clique cover does not partition the class");
        }
    }
    report.kappa_observed = p.kappa_observed();
    if (report.kappa_observed > cfg.kappa_bound) {
        report.violations.push_back("kappa_observed " + std::to_string(report.kappa_observed) + " exceeds bound " +
                                    std::to_string(cfg.kappa_bound));
    }
    if (report.violations.empty()) {
        const ContractedGraph cg = contract(g, p);
        for (std::size_t v = 0; v < cg.base.num_vertices(); ++v) {
            report.max_contraction_degree = std::max(report.max_contraction_degree, cg.base.degree(static_cast<Vertex>(v)));
        }
        if (report.max_contraction_degree > cfg.delta_bound) {
            report.violations.push_back("contraction degree " + std::to_string(report.max_contraction_degree) +
                                        " exceeds bound " + std::to_string(cfg.delta_bound));
        }
        for (auto& v : check_contraction(g, p, cg)) report.violations.push_back(std::move(v));
    }
    return report;
}

std::vector<std::string> check_contraction(const Graph& g, const KappaPartition& p, const ContractedGraph& cg) {
    std::vector<std::string> out;
    if (cg.base.num_vertices() != p.size() || cg.weight.size() != p.size()) {
        out.push_back("contraction size differs from class count");
        return out;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::size_t size = p.classes[i].size();
        if (cg.class_size[i] != size) out.push_back("class_size mismatch at class " + std::to_string(i));
        // ceil(log2 s) computed independently of class_weight
        int ceil_log = 0;
        while ((std::size_t{1} << ceil_log) < size) ++ceil_log;
        if (cg.weight[i] != ceil_log + 1) out.push_back("weight law violated at class " + std::to_string(i));
    }
    std::vector<std::vector<char>> crosses(p.size(), std::vector<char>(p.size(), 0));
    for (const auto& [u, v] : g.edges()) {
        const int a = p.class_of[static_cast<std::size_t>(u)];
        const int b = p.class_of[static_cast<std::size_t>(v)];
        if (a != b) crosses[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                         crosses[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            if (static_cast<bool>(crosses[a][b]) != cg.base.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
                out.push_back("contracted edge (" + std::to_string(a) + "," + std::to_string(b) + ") mismatch");
            }
        }
    }
    const auto class_edges = cg.base.edges();
    if (cg.witness.size() != class_edges.size()) {
        out.push_back("witness count differs from contracted edge count");
        return out;
    }
    for (std::size_t e = 0; e < class_edges.size(); ++e) {
        const auto [u, v] = cg.witness[e];
        if (!g.has_edge(u, v) || p.class_of[static_cast<std::size_t>(u)] != class_edges[e].first ||
            p.class_of[static_cast<std::size_t>(v)] != class_edges[e].second) {
            out.push_back("bad witness for contracted edge " + std::to_string(e));
        }
    }
    return out;
}

}  // namespace udgfvs
