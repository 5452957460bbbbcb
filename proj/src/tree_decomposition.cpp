#include "udgfvs/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>

#include "udgfvs/errors.hpp"

namespace udgfvs {

std::size_t TreeDecomposition::max_bag_size() const {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return best;
}

void TreeDecomposition::add_tree_edge(int a, int b) {
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
}

DecompositionReport validate_decomposition(const TreeDecomposition& td, const Graph& g) {
    DecompositionReport report;
    auto& out = report.violations;
    const std::size_t nodes = td.bags.size();
    const std::size_t n = g.num_vertices();
    if (td.tree.size() != nodes) {
        out.push_back("tree adjacency size differs from bag count");
        return report;
    }
    if (nodes == 0) {
        if (n > 0) out.push_back("no bags for a non-empty graph");
        return report;
    }

    // the node graph must be a tree
    std::size_t half_edges = 0;
    for (std::size_t x = 0; x < nodes; ++x) {
        for (int y : td.tree[x]) {
            if (y < 0 || static_cast<std::size_t>(y) >= nodes || static_cast<std::size_t>(y) == x) {
                out.push_back("bad tree edge at node " + std::to_string(x));
                return report;
            }
            ++half_edges;
        }
    }
    std::vector<char> reached(nodes, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : td.tree[static_cast<std::size_t>(x)]) {
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    if (half_edges != 2 * (nodes - 1) || count != nodes) {
        out.push_back("decomposition tree is not a tree");
        return report;
    }

    std::vector<std::vector<int>> holders(n);
    for (std::size_t x = 0; x < nodes; ++x) {
        const auto& bag = td.bags[x];
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
            out.push_back("bag " + std::to_string(x) + " is not a sorted set");
        }
        for (Vertex v : bag) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                out.push_back("bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
                continue;
            }
            holders[static_cast<std::size_t>(v)].push_back(static_cast<int>(x));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (holders[v].empty()) out.push_back("vertex " + std::to_string(v) + " in no bag");
    }
    for (const auto& [u, v] : g.edges()) {
        const auto& a = holders[static_cast<std::size_t>(u)];
        const auto& b = holders[static_cast<std::size_t>(v)];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) {
            out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag");
        }
    }
    // bag set of v is connected iff it spans |holders| - 1 tree edges
    std::vector<char> holds(nodes, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (holders[v].empty()) continue;
        for (int x : holders[v]) holds[static_cast<std::size_t>(x)] = 1;
        std::size_t inner = 0;
        for (int x : holders[v]) {
            for (int y : td.tree[static_cast<std::size_t>(x)]) {
                if (holds[static_cast<std::size_t>(y)]) ++inner;
            }
        }
        if (inner / 2 + 1 != holders[v].size()) {
            out.push_back("bags of vertex " + std::to_string(v) + " do not form a subtree");
        }
        for (int x : holders[v]) holds[static_cast<std::size_t>(x)] = 0;
    }
    return report;
}

int weighted_width(const TreeDecomposition& td, const std::vector<int>& weight) {
    int best = 0;
    for (const auto& bag : td.bags) {
        int w = 0;
        for (Vertex v : bag) w += weight[static_cast<std::size_t>(v)];
        best = std::max(best, w);
    }
    return best;
}

BlowupGraph blowup(const ContractedGraph& cg) {
    BlowupGraph bg;
    const std::size_t classes = cg.base.num_vertices();
    bg.members.resize(classes);
    Vertex next = 0;
    for (std::size_t v = 0; v < classes; ++v) {
        for (int i = 0; i < cg.weight[v]; ++i) {
            bg.members[v].push_back(next++);
            bg.member_of.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < classes; ++v) {
        const auto& own = bg.members[v];
        for (std::size_t a = 0; a < own.size(); ++a) {
            for (std::size_t b = a + 1; b < own.size(); ++b) edges.emplace_back(own[a], own[b]);
        }
    }
    for (const auto& [u, v] : cg.base.edges()) {
        for (Vertex a : bg.members[static_cast<std::size_t>(u)]) {
            for (Vertex b : bg.members[static_cast<std::size_t>(v)]) edges.emplace_back(a, b);
        }
    }
    bg.graph = Graph::from_edge_list(static_cast<std::size_t>(next), edges);
    return bg;
}

const char* effort_name(Effort e) {
    switch (e) {
        case Effort::MinDegree: return "min-degree";
        case Effort::MinFill: return "min-fill";
        case Effort::Best: return "best";
    }
    return "?";
}

namespace {

// Elimination graph with sorted adjacency lists.
class Eliminator {
public:
    explicit Eliminator(const Graph& h) : adj_(h.num_vertices()), alive_(h.num_vertices(), 1) {
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            const auto nb = h.neighbors(static_cast<Vertex>(v));
            adj_[v].assign(nb.begin(), nb.end());
        }
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool adjacent(Vertex a, Vertex b) const {
        const auto& l = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(l.begin(), l.end(), b);
    }

    std::size_t fill_in(Vertex v) const {
        const auto& nb = neighbors(v);
        std::size_t missing = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!adjacent(nb[i], nb[j])) ++missing;
            }
        }
        return missing;
    }

    // Turns N(v) into a clique and removes v. Returns the former N(v).
    std::vector<Vertex> eliminate(Vertex v) {
        std::vector<Vertex> nb = std::move(adj_[static_cast<std::size_t>(v)]);
        adj_[static_cast<std::size_t>(v)].clear();
        alive_[static_cast<std::size_t>(v)] = 0;
        for (Vertex u : nb) {
            auto& l = adj_[static_cast<std::size_t>(u)];
            std::vector<Vertex> merged;
            merged.reserve(l.size() + nb.size());
            std::set_union(l.begin(), l.end(), nb.begin(), nb.end(), std::back_inserter(merged));
            std::erase_if(merged, [u, v](Vertex w) { return w == u || w == v; });
            l = std::move(merged);
        }
        return nb;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> alive_;
};

template <typename Score>
std::vector<Vertex> greedy_ordering(const Graph& h, Score score) {
    const std::size_t n = h.num_vertices();
    Eliminator elim(h);
    std::vector<std::size_t> key(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (std::size_t v = 0; v < n; ++v) {
        key[v] = score(elim, static_cast<Vertex>(v));
        queue.emplace(key[v], static_cast<Vertex>(v));
    }
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<Vertex> touched;
    while (!queue.empty()) {
        const Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        done[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        const auto nb = elim.eliminate(v);
        touched.assign(nb.begin(), nb.end());
        for (Vertex u : nb) {
            const auto& second = elim.neighbors(u);
            touched.insert(touched.end(), second.begin(), second.end());
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (Vertex u : touched) {
            const auto ui = static_cast<std::size_t>(u);
            if (done[ui]) continue;
            const std::size_t k = score(elim, u);
            if (k != key[ui]) {
                queue.erase({key[ui], u});
                key[ui] = k;
                queue.emplace(k, u);
            }
        }
    }
    return order;
}

}  // namespace

std::vector<Vertex> min_degree_ordering(const Graph& h) {
    return greedy_ordering(h, [](const Eliminator& e, Vertex v) { return e.neighbors(v).size(); });
}

std::vector<Vertex> min_fill_ordering(const Graph& h) {
    return greedy_ordering(h, [](const Eliminator& e, Vertex v) { return e.fill_in(v); });
}

int ordering_width(const Graph& h, const std::vector<Vertex>& order) {
    Eliminator elim(h);
    int width = -1;
    for (Vertex v : order) width = std::max(width, static_cast<int>(elim.eliminate(v).size()));
    return width;
}

TreeDecomposition decomposition_from_ordering(const Graph& h, const std::vector<Vertex>& order) {
    const std::size_t n = h.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        td.tree.emplace_back();
        return td;
    }
    if (order.size() != n) throw InputError("elimination ordering does not cover the graph");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(order[i]);
        if (v >= n || pos[v] != n) throw InputError("elimination ordering is not a permutation");
        pos[v] = i;
    }
    // node of the i-th eliminated vertex is n-1-i, so the last one is node 0
    const auto node_of = [n](std::size_t i) { return static_cast<int>(n - 1 - i); };
    td.bags.resize(n);
    td.tree.resize(n);
    Eliminator elim(h);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        const auto nb = elim.eliminate(v);
        Bag bag(nb.begin(), nb.end());
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[static_cast<std::size_t>(node_of(i))] = std::move(bag);
        if (i + 1 == n) break;
        std::size_t parent = n - 1;  // component roots hang below the last node
        for (Vertex u : nb) parent = std::min(parent, pos[static_cast<std::size_t>(u)]);
        td.add_tree_edge(node_of(i), node_of(parent));
    }
    return td;
}

std::vector<Vertex> branch_and_bound_ordering(const Graph& h, std::vector<Vertex> incumbent,
                                              std::size_t node_budget, bool* optimal) {
    const std::size_t n = h.num_vertices();
    if (n > 64) throw InputError("branch and bound limited to 64 vertices");
    if (incumbent.size() != n) incumbent = min_degree_ordering(h);
    if (n == 0) {
        if (optimal) *optimal = true;
        return incumbent;
    }
    using Mask = std::uint64_t;
    const auto bit = [](std::size_t v) { return Mask{1} << v; };
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;

    struct Search {
        std::size_t n;
        std::size_t budget;
        std::size_t nodes = 0;
        bool exhausted = false;
        int best;
        std::vector<Vertex> best_order;
        std::vector<Vertex> prefix;
        std::unordered_map<Mask, int> seen;  // eliminated set -> smallest width it was reached with

        void run(std::vector<Mask> adj, Mask remaining, int width) {
            if (++nodes > budget) {
                exhausted = true;
                return;
            }
            const int left = std::popcount(remaining);
            if (std::max(width, left - 1) < best) {
                // any completion is within max(width, left-1)
                best = std::max(width, left - 1);
                best_order = prefix;
                for (std::size_t v = 0; v < n; ++v) {
                    if (remaining >> v & 1) best_order.push_back(static_cast<Vertex>(v));
                }
            }
            if (left - 1 <= width) return;
            int min_deg = left;
            std::vector<std::pair<int, std::size_t>> cands;
            for (std::size_t v = 0; v < n; ++v) {
                if (!(remaining >> v & 1)) continue;
                const int d = std::popcount(adj[v]);
                min_deg = std::min(min_deg, d);
                cands.emplace_back(d, v);
            }
            if (std::max(width, min_deg) >= best) return;
            const Mask eliminated = ~remaining;
            const auto it = seen.find(eliminated);
            if (it != seen.end() && it->second <= width) return;
            seen[eliminated] = width;

            // a simplicial vertex can be eliminated first without loss
            for (const auto& [d, v] : cands) {
                const Mask nb = adj[v];
                bool clique = true;
                for (Mask rest = nb; rest && clique; rest &= rest - 1) {
                    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
                    if ((nb & ~(Mask{1} << u) & ~adj[u]) != 0) clique = false;
                }
                if (clique) {
                    cands = {{d, v}};
                    break;
                }
            }
            std::sort(cands.begin(), cands.end());
            for (const auto& [d, v] : cands) {
                if (std::max(width, d) >= best) continue;
                std::vector<Mask> next = adj;
                const Mask nb = adj[v];
                for (Mask rest = nb; rest; rest &= rest - 1) {
                    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
                    next[u] = (next[u] | nb) & ~(Mask{1} << u) & ~(Mask{1} << v);
                }
                next[v] = 0;
                prefix.push_back(static_cast<Vertex>(v));
                run(std::move(next), remaining & ~(Mask{1} << v), std::max(width, d));
                prefix.pop_back();
                if (exhausted) return;
            }
        }
    };

    std::vector<Mask> adj(n, 0);
    for (const auto& [u, v] : h.edges()) {
        adj[static_cast<std::size_t>(u)] |= bit(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)] |= bit(static_cast<std::size_t>(u));
    }
    Search s{n, node_budget};
    s.best = ordering_width(h, incumbent);
    s.best_order = incumbent;
    s.run(adj, all, -1);
    if (optimal) *optimal = !s.exhausted;
    return s.best_order;
}

TreeDecomposition decompose_unweighted(const Graph& h, Effort effort) {
    std::vector<Vertex> order;
    if (effort == Effort::MinDegree) {
        order = min_degree_ordering(h);
    } else if (effort == Effort::MinFill) {
        order = min_fill_ordering(h);
    } else {
        order = min_degree_ordering(h);
        auto fill = min_fill_ordering(h);
        if (ordering_width(h, fill) < ordering_width(h, order)) order = std::move(fill);
    }
    if (h.num_vertices() <= kExactRefinementLimit) {
        order = branch_and_bound_ordering(h, std::move(order), 200000);
    }
    return decomposition_from_ordering(h, order);
}

TreeDecomposition project(const TreeDecomposition& td_blowup, const BlowupGraph& bg, const ContractedGraph& cg) {
    TreeDecomposition td;
    td.tree = td_blowup.tree;
    std::vector<int> seen(bg.members.size(), 0);
    for (const auto& bag : td_blowup.bags) {
        Bag projected;
        for (Vertex b : bag) {
            const Vertex v = bg.member_of[static_cast<std::size_t>(b)];
            if (++seen[static_cast<std::size_t>(v)] == static_cast<int>(bg.members[static_cast<std::size_t>(v)].size())) {
                projected.push_back(v);
            }
        }
        for (Vertex b : bag) seen[static_cast<std::size_t>(bg.member_of[static_cast<std::size_t>(b)])] = 0;
        std::sort(projected.begin(), projected.end());
        td.bags.push_back(std::move(projected));
    }
    const auto report = validate_decomposition(td, cg.base);
    if (!report.ok()) throw InternalError("projected decomposition invalid: " + report.violations.front());
    return td;
}

const char* nice_kind_name(NiceKind k) {
    switch (k) {
        case NiceKind::Leaf: return "leaf";
        case NiceKind::Introduce: return "introduce";
        case NiceKind::Forget: return "forget";
        case NiceKind::Join: return "join";
    }
    return "?";
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    // reorder so the root becomes node 0
    const int count = static_cast<int>(nodes.size());
    const auto remap = [count](int x) { return count - 1 - x; };
    td.bags.resize(nodes.size());
    td.tree.resize(nodes.size());
    for (int x = 0; x < count; ++x) {
        td.bags[static_cast<std::size_t>(remap(x))] = nodes[static_cast<std::size_t>(x)].bag;
        for (int c : nodes[static_cast<std::size_t>(x)].children) td.add_tree_edge(remap(x), remap(c));
    }
    return td;
}

NiceDecomposition make_nice(const TreeDecomposition& td) {
    NiceDecomposition nd;
    const auto add = [&nd](NiceKind kind, Vertex v, std::vector<int> children, Bag bag) {
        nd.nodes.push_back(NiceNode{kind, v, std::move(children), std::move(bag)});
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    // walk from node `from` (bag `have`) to bag `want`: forgets first, then introduces
    const auto chain = [&](int from, Bag have, const Bag& want) {
        std::vector<Vertex> drop;
        std::vector<Vertex> gain;
        std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(drop));
        std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(gain));
        for (Vertex v : drop) {
            have.erase(std::lower_bound(have.begin(), have.end(), v));
            from = add(NiceKind::Forget, v, {from}, have);
        }
        for (Vertex v : gain) {
            have.insert(std::lower_bound(have.begin(), have.end(), v), v);
            from = add(NiceKind::Introduce, v, {from}, have);
        }
        return from;
    };

    const std::size_t count = td.bags.size();
    if (count == 0) {
        nd.root = add(NiceKind::Leaf, -1, {}, {});
        return nd;
    }
    std::vector<int> parent(count, -1);
    std::vector<int> order;  // preorder from node 0
    std::vector<char> visited(count, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : td.tree[static_cast<std::size_t>(x)]) {
            if (!visited[static_cast<std::size_t>(y)]) {
                visited[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
        }
    }
    std::vector<std::vector<int>> children(count);
    for (int x : order) {
        if (parent[static_cast<std::size_t>(x)] >= 0) children[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])].push_back(x);
    }
    std::vector<int> top(count, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        const Bag& bag = td.bags[x];
        int current = -1;
        auto kids = children[x];
        std::sort(kids.begin(), kids.end());
        for (int c : kids) {
            const int lifted = chain(top[static_cast<std::size_t>(c)], td.bags[static_cast<std::size_t>(c)], bag);
            current = current < 0 ? lifted : add(NiceKind::Join, -1, {current, lifted}, bag);
        }
        if (current < 0) current = chain(add(NiceKind::Leaf, -1, {}, {}), {}, bag);
        top[x] = current;
    }
    nd.root = chain(top[0], td.bags[0], {});
    return nd;
}

DecompositionReport validate_nice(const NiceDecomposition& nd, const Graph& g) {
    DecompositionReport report;
    auto& out = report.violations;
    if (nd.nodes.empty() || nd.root != static_cast<int>(nd.nodes.size()) - 1) {
        out.push_back("root must be the last node");
        return report;
    }
    if (!nd.nodes.back().bag.empty()) out.push_back("root bag not empty");
    std::vector<int> forgets(g.num_vertices(), 0);
    std::vector<int> parents(nd.nodes.size(), 0);
    for (std::size_t x = 0; x < nd.nodes.size(); ++x) {
        const NiceNode& node = nd.nodes[x];
        const std::string where = "node " + std::to_string(x) + " (" + nice_kind_name(node.kind) + ")";
        for (int c : node.children) {
            if (c < 0 || static_cast<std::size_t>(c) >= x) {
                out.push_back(where + ": child index not below parent");
                return report;
            }
            ++parents[static_cast<std::size_t>(c)];
        }
        const auto child_bag = [&](std::size_t i) -> const Bag& {
            return nd.nodes[static_cast<std::size_t>(node.children[i])].bag;
        };
        switch (node.kind) {
            case NiceKind::Leaf:
                if (!node.children.empty() || !node.bag.empty()) out.push_back(where + ": leaf must be empty");
                break;
            case NiceKind::Introduce:
            case NiceKind::Forget: {
                if (node.children.size() != 1) {
                    out.push_back(where + ": needs one child");
                    break;
                }
                const Bag& small = node.kind == NiceKind::Introduce ? child_bag(0) : node.bag;
                const Bag& large = node.kind == NiceKind::Introduce ? node.bag : child_bag(0);
                Bag expect = small;
                if (std::binary_search(small.begin(), small.end(), node.vertex)) {
                    out.push_back(where + ": vertex already present");
                    break;
                }
                expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
                if (expect != large) out.push_back(where + ": bag mismatch");
                if (node.kind == NiceKind::Forget && node.vertex >= 0 &&
                    static_cast<std::size_t>(node.vertex) < forgets.size()) {
                    ++forgets[static_cast<std::size_t>(node.vertex)];
                }
                break;
            }
            case NiceKind::Join:
                if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag) {
                    out.push_back(where + ": join needs two children with identical bags");
                }
                break;
        }
    }
    for (std::size_t x = 0; x + 1 < nd.nodes.size(); ++x) {
        if (parents[x] != 1) out.push_back("node " + std::to_string(x) + " has " + std::to_string(parents[x]) + " parents");
    }
    for (std::size_t v = 0; v < forgets.size(); ++v) {
        if (forgets[v] != 1) out.push_back("vertex " + std::to_string(v) + " forgotten " + std::to_string(forgets[v]) + " times");
    }
    for (auto& v : validate_decomposition(nd.as_tree_decomposition(), g).violations) out.push_back(std::move(v));
    return report;
}

}  // namespace udgfvs
