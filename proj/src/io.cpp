#include "udgfvs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "udgfvs/errors.hpp"

namespace udgfvs {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool is_comment(const std::string& line) { return line.empty() || line[0] == 'c'; }

// Next non-comment line, split into tokens; false at end of input.
bool next_tokens(std::istream& is, std::vector<std::string>& tokens, std::size_t& line_no) {
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment(line)) continue;
        tokens = split(line);
        if (!tokens.empty()) return true;
    }
    return false;
}

template <typename T>
T parse_number(const std::string& tok, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InputError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
    }
    return value;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

Graph parse_graph_body(std::istream& is, const std::vector<std::string>& header, std::size_t& line_no) {
    if (header.size() != 4 || header[0] != "p" || header[1] != "fvs") bad_line(line_no, "expected 'p fvs <n> <m>'");
    const auto n = parse_number<std::size_t>(header[2], line_no);
    const auto m = parse_number<std::size_t>(header[3], line_no);
    std::vector<Edge> edges;
    std::vector<std::string> tok;
    while (next_tokens(is, tok, line_no)) {
        if (tok.size() != 3 || tok[0] != "e") bad_line(line_no, "expected 'e <u> <v>'");
        edges.emplace_back(parse_number<Vertex>(tok[1], line_no), parse_number<Vertex>(tok[2], line_no));
    }
    if (edges.size() != m) {
        throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph::from_edge_list(n, edges);
}

ObjectSet parse_objects_body(std::istream& is, const std::vector<std::string>& header, std::size_t& line_no) {
    if (header.size() != 5 || header[0] != "p" || header[1] != "objects") {
        bad_line(line_no, "expected 'p objects <n> <alpha> <gamma>'");
    }
    ObjectSet objs;
    const auto n = parse_number<std::size_t>(header[2], line_no);
    objs.alpha = parse_number<double>(header[3], line_no);
    objs.gamma = parse_number<double>(header[4], line_no);
    std::vector<std::string> tok;
    while (next_tokens(is, tok, line_no)) {
        if (tok.size() != 6 || tok[0] != "o") bad_line(line_no, "expected 'o <shape> <x> <y> <inner_r> <outer_r>'");
        FatObject o;
        o.shape = parse_shape(tok[1]);
        o.center = {parse_number<double>(tok[2], line_no), parse_number<double>(tok[3], line_no)};
        o.inner_radius = parse_number<double>(tok[4], line_no);
        o.outer_radius = parse_number<double>(tok[5], line_no);
        objs.objects.push_back(o);
    }
    if (objs.objects.size() != n) {
        throw InputError("header announces " + std::to_string(n) + " objects, found " +
                         std::to_string(objs.objects.size()));
    }
    objs.validate();
    return objs;
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw InternalError("format_real failed");
    return std::string(buf, ptr);
}

void write_graph(std::ostream& os, const Graph& g) {
    os << "p fvs " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
    std::size_t line_no = 0;
    std::vector<std::string> header;
    if (!next_tokens(is, header, line_no)) throw InputError("empty graph file");
    return parse_graph_body(is, header, line_no);
}

void write_objects(std::ostream& os, const ObjectSet& objs) {
    os << "p objects " << objs.size() << ' ' << format_real(objs.alpha) << ' ' << format_real(objs.gamma) << '\n';
    for (const auto& o : objs.objects) {
        os << "o " << shape_name(o.shape) << ' ' << format_real(o.center.x) << ' ' << format_real(o.center.y) << ' '
           << format_real(o.inner_radius) << ' ' << format_real(o.outer_radius) << '\n';
    }
}

ObjectSet read_objects(std::istream& is) {
    std::size_t line_no = 0;
    std::vector<std::string> header;
    if (!next_tokens(is, header, line_no)) throw InputError("empty points file");
    return parse_objects_body(is, header, line_no);
}

void write_decomposition(std::ostream& os, const TreeDecomposition& td, std::size_t n) {
    os << "s td " << td.num_nodes() << ' ' << td.max_bag_size() << ' ' << n << '\n';
    for (std::size_t x = 0; x < td.num_nodes(); ++x) {
        os << "b " << x + 1;
        for (Vertex v : td.bags[x]) os << ' ' << v + 1;
        os << '\n';
    }
    for (std::size_t x = 0; x < td.num_nodes(); ++x) {
        auto nb = td.tree[x];
        std::sort(nb.begin(), nb.end());
        for (int y : nb) {
            if (static_cast<std::size_t>(y) > x) os << x + 1 << ' ' << y + 1 << '\n';
        }
    }
}

TreeDecomposition read_decomposition(std::istream& is, std::size_t* n_out) {
    std::size_t line_no = 0;
    std::vector<std::string> tok;
    if (!next_tokens(is, tok, line_no)) throw InputError("empty decomposition file");
    if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") bad_line(line_no, "expected 's td <bags> <max> <n>'");
    const auto bags = parse_number<std::size_t>(tok[2], line_no);
    const auto n = parse_number<std::size_t>(tok[4], line_no);
    TreeDecomposition td;
    td.bags.resize(bags);
    td.tree.resize(bags);
    std::vector<char> seen(bags, 0);
    while (next_tokens(is, tok, line_no)) {
        if (tok[0] == "b") {
            if (tok.size() < 2) bad_line(line_no, "bag line without id");
            const auto id = parse_number<std::size_t>(tok[1], line_no);
            if (id < 1 || id > bags || seen[id - 1]) bad_line(line_no, "bad or repeated bag id");
            seen[id - 1] = 1;
            Bag bag;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto v = parse_number<Vertex>(tok[i], line_no);
                if (v < 1 || static_cast<std::size_t>(v) > n) bad_line(line_no, "vertex out of range");
                bag.push_back(v - 1);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[id - 1] = std::move(bag);
        } else {
            if (tok.size() != 2) bad_line(line_no, "expected tree edge '<i> <j>'");
            const auto a = parse_number<std::size_t>(tok[0], line_no);
            const auto b = parse_number<std::size_t>(tok[1], line_no);
            if (a < 1 || a > bags || b < 1 || b > bags || a == b) bad_line(line_no, "bad tree edge");
            td.add_tree_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) throw InputError("decomposition file misses bags");
    if (n_out) *n_out = n;
    return td;
}

Instance read_instance(std::istream& is) {
    std::size_t line_no = 0;
    std::vector<std::string> header;
    if (!next_tokens(is, header, line_no)) throw InputError("empty input file");
    Instance inst;
    if (header.size() >= 2 && header[0] == "p" && header[1] == "objects") {
        inst.objects = parse_objects_body(is, header, line_no);
        inst.graph = build_intersection_graph(*inst.objects);
    } else {
        inst.graph = parse_graph_body(is, header, line_no);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_instance(in);
}

void save_text(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << contents;
}

}  // namespace udgfvs
