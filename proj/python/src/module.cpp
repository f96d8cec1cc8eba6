#include "cliquebound/bounds.hpp"
#include "cliquebound/clique.hpp"
#include "cliquebound/errors.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/simplex.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cliquebound;

namespace {

// Exact values cross the boundary as Python ints and fractions.Fraction.
py::object to_py(const Integer &z) { return py::module_::import("builtins").attr("int")(to_string(z)); }

py::object to_py(const Rational &q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

Rational from_py(const py::handle &value) {
  auto fraction = py::module_::import("fractions").attr("Fraction")(value);
  const auto num = py::str(fraction.attr("numerator")).cast<std::string>();
  const auto den = py::str(fraction.attr("denominator")).cast<std::string>();
  return parse_rational(num + "/" + den);
}

WorkBudget budget_of(std::uint64_t nodes) { return nodes == 0 ? WorkBudget::unlimited() : WorkBudget::nodes(nodes); }

SimplexPoint point_of(const Graph &g, const std::optional<std::vector<py::object>> &x) {
  if (!x) return SimplexPoint::uniform(g.n());
  std::vector<Rational> coords;
  for (const auto &v : *x) coords.push_back(from_py(v));
  return SimplexPoint::from_coordinates(std::move(coords));
}

py::dict report_dict(const BoundReport &r) {
  py::dict d;
  d["t"] = r.t;
  d["n"] = r.n;
  d["m"] = r.m;
  d["omega"] = r.omega;
  d["N"] = to_py(r.true_count);
  d["localized_bound"] = to_py(r.localized_zykov);
  d["zykov_bound"] = to_py(r.zykov_classical);
  d["turan_bound"] = r.turan ? to_py(*r.turan) : py::none();
  d["edge_localized_sum"] = to_py(r.edge_localized_sum);
  d["vertex_localized_turan_value"] = to_py(r.vertex_localized_turan_value);
  d["vertex_localized_turan"] = to_py(r.vertex_localized_turan);
  d["kirsch_nir_sum"] = to_py(r.kirsch_nir_sum);
  d["kirsch_nir_equal"] = r.kirsch_nir_equal;
  d["tight"] = r.is_tight;
  d["degenerate"] = r.degenerate;
  d["certificate"] = r.extremal_certificate ? py::cast(r.extremal_certificate->sizes) : py::none();
  d["characterization_consistent"] = r.characterization_consistent;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact clique counts, localized clique-count bounds and the simplex potential";
  m.attr("__version__") = CLIQUEBOUND_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge> &edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("complement", &Graph::complement)
      .def("to_graph6", [](const Graph &g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph &g) { return to_edge_list(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph &g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def(
      "complete_multipartite",
      [](const std::vector<std::size_t> &parts) { return generate_complete_multipartite(PartSpec{parts}); },
      py::arg("parts"));
  m.def(
      "random_graph", [](std::size_t n, py::object p, std::uint64_t seed) { return generate_random(n, from_py(p), seed); },
      py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("empty_graph", &empty_graph);

  m.def(
      "count_cliques",
      [](const Graph &g, std::size_t t, std::uint64_t budget) { return to_py(count_cliques(g, t, budget_of(budget)).count); },
      py::arg("g"), py::arg("t"), py::arg("budget") = 0);
  m.def(
      "vertex_clique_numbers",
      [](const Graph &g, std::uint64_t budget) {
        auto p = vertex_clique_numbers(g, budget_of(budget));
        return py::make_tuple(p.c, p.omega);
      },
      py::arg("g"), py::arg("budget") = 0, "Returns (c, omega).");
  m.def(
      "localized_bound",
      [](const Graph &g, std::size_t t) { return to_py(localized_zykov_bound(g, t, vertex_clique_numbers(g))); },
      py::arg("g"), py::arg("t"));
  m.def(
      "regular_multipartite_parts",
      [](const Graph &g) -> py::object {
        auto parts = is_regular_complete_multipartite(g);
        return parts ? py::cast(parts->sizes) : py::none();
      },
      py::arg("g"));
  m.def(
      "bound_report",
      [](const Graph &g, std::size_t t, std::uint64_t budget) { return report_dict(bound_report(g, t, budget_of(budget))); },
      py::arg("g"), py::arg("t"), py::arg("budget") = 0);

  m.def(
      "eval_phi",
      [](const Graph &g, std::size_t t, std::optional<std::vector<py::object>> x) {
        const auto e = eval_phi(g, t, vertex_clique_numbers(g), point_of(g, x));
        return py::make_tuple(to_py(e.a), to_py(e.b), to_py(e.phi));
      },
      py::arg("g"), py::arg("t"), py::arg("x") = py::none(), "Returns (A, B, Phi); x defaults to the uniform point.");
  m.def(
      "delta",
      [](const Graph &g, std::size_t t, Vertex i, Vertex j, std::optional<std::vector<py::object>> x) {
        return to_py(delta_ij(g, t, vertex_clique_numbers(g), point_of(g, x), i, j));
      },
      py::arg("g"), py::arg("t"), py::arg("i"), py::arg("j"), py::arg("x") = py::none());
  m.def(
      "descend",
      [](const Graph &g, std::size_t t, std::optional<std::vector<py::object>> x) {
        const auto trace = descend_to_clique_support(g, t, vertex_clique_numbers(g), point_of(g, x));
        py::list steps;
        for (const auto &s : trace.steps) {
          py::dict d;
          d["i"] = s.i;
          d["j"] = s.j;
          d["epsilon"] = to_py(s.epsilon);
          d["delta"] = to_py(s.delta_ij);
          d["phi"] = to_py(s.phi_after);
          steps.append(d);
        }
        py::list end;
        for (const auto &v : trace.end.coordinates()) end.append(to_py(v));
        py::dict out;
        out["steps"] = steps;
        out["phi_start"] = to_py(trace.phi_start);
        out["phi_end"] = to_py(trace.phi_end);
        out["end"] = end;
        out["end_support"] = trace.end.support().to_vector();
        out["end_support_is_clique"] = trace.end_support_is_clique;
        return out;
      },
      py::arg("g"), py::arg("t"), py::arg("x") = py::none());
}
