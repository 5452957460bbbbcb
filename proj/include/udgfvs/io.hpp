#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "udgfvs/geometry.hpp"
#include "udgfvs/graph.hpp"
#include "udgfvs/tree_decomposition.hpp"

namespace udgfvs {

// Graph text format:
//   p fvs <n> <m>
//   e <u> <v>        (m lines, 0-based ids)
// Lines starting with "c" are comments. Writers emit edges with u < v in
// lexicographic order, single spaces, LF endings.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

// Points format:
//   p objects <n> <alpha> <gamma>
//   o <disk|square> <x> <y> <inner_r> <outer_r>
// Reals are written in shortest round-trip form.
void write_objects(std::ostream& os, const ObjectSet& objs);
ObjectSet read_objects(std::istream& is);

// PACE .td format with 1-based bag and vertex ids:
//   s td <num_bags> <max_bag_size> <n>
//   b <bag_id> <v...>
//   <i> <j>          (tree edges)
void write_decomposition(std::ostream& os, const TreeDecomposition& td, std::size_t n);
TreeDecomposition read_decomposition(std::istream& is, std::size_t* n = nullptr);

std::string format_real(double x);

// A solver input: a graph file, or a points file (which carries geometric
// provenance and yields its intersection graph).
struct Instance {
    Graph graph;
    std::optional<ObjectSet> objects;
};

Instance read_instance(std::istream& is);
Instance load_instance(const std::string& path);

void save_text(const std::string& path, const std::string& contents);

}  // namespace udgfvs
