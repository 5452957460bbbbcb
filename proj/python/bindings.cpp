#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "udgfvs/bench.hpp"
#include "udgfvs/errors.hpp"
#include "udgfvs/geometry.hpp"
#include "udgfvs/io.hpp"
#include "udgfvs/oracle.hpp"
#include "udgfvs/solver.hpp"

namespace py = pybind11;
using namespace udgfvs;

namespace {

Graph graph_from(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }

py::dict solution_dict(const Solution& s) {
    py::dict d;
    d["verdict"] = s.yes ? "yes" : "no";
    d["fvs"] = s.fvs;
    d["certificate"] = certificate_name(s.certificate);
    d["min_fvs"] = s.min_fvs ? py::cast(*s.min_fvs) : py::none();
    d["weighted_width"] = s.weighted_width;
    d["high_degree_count"] = s.high_degree_count;
    d["class_count"] = s.class_count;
    d["kappa_observed"] = s.kappa_observed;
    d["timings"] = s.timings;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Feedback vertex set on geometric intersection graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, Vertex v) {
            if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) throw py::index_error("vertex out of range");
            const auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("is_forest", &is_forest);
    m.def("count_high_degree", &count_high_degree);
    m.def("peel", [](const Graph& g) {
        const PeelResult p = peel_degree_one(g);
        return py::make_tuple(p.reduced, p.kept, p.removed);
    });

    m.def("random_udg_graph", [](std::size_t n, double density, std::uint64_t seed) {
        return build_intersection_graph(random_udg(n, density, seed));
    }, py::arg("n"), py::arg("density"), py::arg("seed"));
    m.def("planted_graph", [](std::size_t k, std::size_t path_len, std::uint64_t seed) {
        const PlantedInstance p = planted_yes_instance(k, path_len, seed);
        return py::make_tuple(build_intersection_graph(p.objects), p.hubs);
    }, py::arg("k"), py::arg("path_len") = 0, py::arg("seed") = 1);

    m.def("parse_graph", [](const std::string& text) {
        std::istringstream is(text);
        return read_instance(is).graph;
    });
    m.def("format_graph", [](const Graph& g) {
        std::ostringstream os;
        write_graph(os, g);
        return os.str();
    });

    m.def("solve", [](const Graph& g, std::int64_t k, const std::string& mode, bool thresholds, bool geometric) {
        SolveConfig cfg;
        cfg.k = k;
        cfg.mode = parse_mode(mode);
        cfg.enable_thresholds = thresholds;
        cfg.geometric = geometric;
        Solution s;
        {
            py::gil_scoped_release release;
            s = solve(g, cfg);
        }
        return solution_dict(s);
    }, py::arg("graph"), py::arg("k"), py::arg("mode") = "auto", py::arg("thresholds") = false,
       py::arg("geometric") = false);

    m.def("min_fvs_bruteforce", [](const Graph& g) {
        const OracleFvs o = min_fvs_bruteforce(g);
        return py::make_tuple(o.size, o.witness);
    });
    m.def("exact_treewidth", [](const Graph& g) { return exact_treewidth(g); });

    m.def("validate", [](const Graph& g) {
        const PipelineValidation v = validate_pipeline(g);
        py::dict d;
        d["violations"] = v.violations;
        d["kappa_observed"] = v.kappa_observed;
        d["max_contraction_degree"] = v.max_contraction_degree;
        d["class_count"] = v.class_count;
        d["weighted_width"] = v.weighted_width;
        return d;
    });

    m.def("bench_csv", [](const std::string& family, const std::vector<std::size_t>& ks, std::size_t seeds,
                          std::uint64_t seed_base) {
        BenchSpec spec;
        spec.family = parse_family(family);
        spec.ks = ks;
        spec.seeds = seeds;
        spec.seed_base = seed_base;
        return bench_csv(run_bench(spec));
    }, py::arg("family") = "planted", py::arg("ks") = std::vector<std::size_t>{4, 9}, py::arg("seeds") = 3,
       py::arg("seed_base") = 1);
}
