#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kclique/cliques.hpp"
#include "kclique/graph.hpp"
#include "kclique/multidim.hpp"

namespace py = pybind11;
using namespace kclique;

namespace {

std::vector<IntMatrix> adjacency_copies(const Graph& g, std::size_t k) {
    return std::vector<IntMatrix>(k, lift(g.adjacency()));
}

py::dict report_dict(const CountReport& rep) {
    py::dict d;
    d["algorithm"] = rep.algorithm;
    d["r"] = rep.r;
    d["q"] = rep.q ? py::cast(*rep.q) : py::none();
    d["k1"] = rep.k1 ? py::cast(*rep.k1) : py::none();
    d["count"] = rep.count;
    d["elapsed_ms"] = rep.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Clique counting via multi-dimensional matrix products";

    py::register_exception<guard_error>(m, "GuardError", PyExc_MemoryError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_property_readonly("n", &Graph::n)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    py::class_<MultiDimProduct>(m, "MultiDimProduct")
        .def_property_readonly("k", &MultiDimProduct::k)
        .def_property_readonly("n", &MultiDimProduct::n)
        .def_property_readonly("k1", &MultiDimProduct::k1)
        .def("entry", [](const MultiDimProduct& d,
                         const std::vector<std::size_t>& tuple) {
            return d.entry(tuple);
        });

    m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_planted", &gen_planted, py::arg("n"), py::arg("p"),
          py::arg("r"), py::arg("seed"));
    m.def("complete_graph", &complete_graph);
    m.def("empty_graph", &empty_graph);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("emit_edge_list", &emit_edge_list);
    m.def("parse_dimacs", [](const std::string& s) { return parse_dimacs(s); });

    m.def("enumerate_cliques", [](const Graph& g, std::size_t t) {
        return enumerate_cliques(g, t).copies;
    });
    m.def("extension_set", [](const Graph& g, const std::vector<std::size_t>& h) {
        return extension_set(g, h);
    });
    m.def("is_clique", [](const Graph& g, const std::vector<std::size_t>& s) {
        return is_clique(g, s);
    });
    m.def("common_neighbor_count",
          [](const Graph& g, const std::vector<std::size_t>& t) {
              return common_neighbor_count(g, t);
          });

    m.def("common_neighbors_tensor", &common_neighbors_tensor, py::arg("g"),
          py::arg("k"), py::arg("k1") = 0,
          py::arg("entry_limit") = kDefaultTensorEntryLimit);
    m.def("adjacency_tensor_witness",
          [](const Graph& g, const std::vector<std::size_t>& tuple) {
              const auto mats = adjacency_copies(g, tuple.size());
              return find_witness(mats, tuple);
          },
          "Smallest common neighbor of the tuple, or None");

    m.def("count_bruteforce", [](const Graph& g, std::size_t r) {
        return report_dict(count_bruteforce(g, r));
    });
    m.def("count_triangles_ir",
          [](const Graph& g) { return report_dict(count_triangles_ir(g)); });
    m.def("count_triangle_method", [](const Graph& g, std::size_t r) {
        return report_dict(count_triangle_method(g, r));
    });
    m.def("count_alg1",
          [](const Graph& g, std::size_t r, std::size_t k1) {
              return report_dict(count_alg1(g, r, k1));
          },
          py::arg("g"), py::arg("r"), py::arg("k1") = 0);
    m.def("count_alg2", [](const Graph& g, std::size_t r) {
        return report_dict(count_alg2(g, r));
    });
    m.def("count_alg3", [](const Graph& g, std::size_t r, std::size_t q) {
        return report_dict(count_alg3(g, r, q));
    });
    m.def("detect_alg3",
          [](const Graph& g, std::size_t r, std::size_t q) {
              return detect_alg3(g, r, q);
          });
    m.def("find_alg1",
          [](const Graph& g, std::size_t r) { return find_alg1(g, r).vertices; });
    m.def("find_alg2",
          [](const Graph& g, std::size_t r) { return find_alg2(g, r).vertices; });
    m.def("find_alg3", [](const Graph& g, std::size_t r, std::size_t q) {
        return find_alg3(g, r, q).vertices;
    });
}
