#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exactroot/clique_dual.hpp"
#include "exactroot/error.hpp"
#include "exactroot/general_root.hpp"
#include "exactroot/generators.hpp"
#include "exactroot/io.hpp"
#include "exactroot/oracle.hpp"
#include "exactroot/tree_root.hpp"

namespace py = pybind11;
using namespace exactroot;

PYBIND11_MODULE(_exactroot, m) {
  m.doc() = "Exact-distance square roots of graphs";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.order()) + ", " + io::emit_graph6(g) + ")";
      });

  m.def("exact_square", py::overload_cast<const Graph&>(&exact_square));
  m.def("complement", py::overload_cast<const Graph&>(&complement));
  m.def("is_clique_tree", &is_clique_tree);
  m.def("is_tree", &is_tree);
  m.def("connected_components", &connected_components);

  m.def("parse_graph6", &io::parse_graph6);
  m.def("emit_graph6", &io::emit_graph6);
  m.def("parse_edge_list", &io::parse_edge_list);
  m.def("emit_edge_list", &io::emit_edge_list);

  m.def("recognize_any_root", py::overload_cast<const Graph&>(&recognize_any_root),
        "Root whose exact square is g, or None.");
  m.def(
      "recognize_tree_root",
      [](const Graph& g) -> std::optional<Graph> { return recognize_tree_root(g).root; },
      "Tree root labelled like g, or None.");

  m.def("clique_cover_gadget", &clique_cover_gadget, py::arg("g"), py::arg("k"));
  m.def(
      "cover_to_bipartite_root",
      [](const Graph& g, const std::vector<VertexSet>& cliques) {
        return cover_to_bipartite_root(g, CliqueCover{cliques});
      },
      py::arg("g"), py::arg("cliques"));
  m.def(
      "bipartite_root_to_cover",
      [](const Graph& gadget, const Graph& b, int n, int k) {
        return bipartite_root_to_cover(gadget, b, n, k).cliques;
      },
      py::arg("gadget"), py::arg("b"), py::arg("n"), py::arg("k"));

  m.def("gen_GS", &gen_GS, py::arg("s"));
  m.def("gen_TL", &gen_TL, py::arg("s"), py::arg("perm"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_clique_tree", &random_clique_tree, py::arg("n"), py::arg("seed"));

  m.def("bruteforce_tree_roots", &bruteforce_tree_roots, py::arg("g"), py::arg("max_n") = 9);
  m.def("count_nonisomorphic_tree_roots", &count_nonisomorphic_tree_roots, py::arg("g"),
        py::arg("max_n") = 9);
}
