#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "edgepoly/analysis.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/series.hpp"

namespace py = pybind11;
using namespace edgepoly;

namespace {

Graph graph_of(const std::string& text) { return parse_graph(text); }

PipelineOptions options_of(const std::string& order) {
  PipelineOptions opts;
  if (order == "grevlex")
    opts.order = TermOrder::Kind::Grevlex;
  else if (order != "lex")
    throw InvalidParameter("order must be 'lex' or 'grevlex'");
  return opts;
}

py::int_ to_pyint(const mpz_class& z) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(z.get_str()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ehrhart series and polynomials of edge polytopes";

  py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GraphError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidParameter& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const HypothesisViolated& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "validate",
      [](const std::string& text) {
        Graph g = graph_of(text);
        return py::make_tuple(g.vertex_count(), g.edge_count());
      },
      py::arg("graph"),
      "Parse a graph description; returns (vertex count, edge count) or raises ValueError.");

  m.def(
      "ehrhart_series",
      [](const std::string& text, const std::string& order) {
        return ehrhart_series(graph_of(text), options_of(order)).str();
      },
      py::arg("graph"), py::arg("order") = "lex");

  m.def(
      "edge_ring_series",
      [](const std::string& text, const std::string& order) {
        return edge_ring_series(graph_of(text), options_of(order)).str();
      },
      py::arg("graph"), py::arg("order") = "lex");

  m.def(
      "hstar_vector",
      [](const std::string& text, const std::string& order) {
        RationalSeries s = ehrhart_series(graph_of(text), options_of(order));
        std::vector<py::int_> out;
        for (const auto& c : s.numerator.coeffs()) out.push_back(to_pyint(c));
        return out;
      },
      py::arg("graph"), py::arg("order") = "lex",
      "Numerator coefficients of the Ehrhart series, constant term first.");

  m.def(
      "dimension",
      [](const std::string& text) {
        Graph g = graph_of(text);
        return g.vertex_count() - (is_bipartite(g) ? 2 : 1);
      },
      py::arg("graph"), "Dimension of the edge polytope.");

  m.def(
      "ehrhart_polynomial",
      [](const std::string& text, const std::string& order) {
        QPoly p = ehrhart_polynomial(ehrhart_series(graph_of(text), options_of(order)));
        std::vector<std::string> out;
        for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
        return out;
      },
      py::arg("graph"), py::arg("order") = "lex",
      "Coefficients as rational strings, constant term first.");

  m.def(
      "lattice_points",
      [](const std::string& text, long m, const std::string& order) {
        QPoly p = ehrhart_polynomial(ehrhart_series(graph_of(text), options_of(order)));
        return to_pyint(ehrhart_evaluate(p, m));
      },
      py::arg("graph"), py::arg("m"), py::arg("order") = "lex",
      "Lattice points of the m-th dilate, from the computed polynomial.");

  m.def(
      "count_lattice_points_lp",
      [](const std::string& text, long m) {
        return to_pyint(count_lattice_points_lp(graph_of(text), m));
      },
      py::arg("graph"), py::arg("m"),
      "Independent count by exact LP membership over all candidates.");

  m.def(
      "count_lattice_points_monoid",
      [](const std::string& text, long m) {
        return to_pyint(count_lattice_points_monoid(graph_of(text), m));
      },
      py::arg("graph"), py::arg("m"),
      "Independent count of distinct degree-m monomial images.");

  m.def(
      "generators",
      [](const std::string& text, const std::string& order) {
        Graph g = graph_of(text);
        PipelineOptions opts = options_of(order);
        auto cycles = enumerate_simple_cycles(g, opts.walk_cap);
        auto pairs = find_exceptional_pairs(g, cycles);
        auto walks = enumerate_primitive_even_walks(g, cycles, opts.walk_cap);
        VariableSet vs = build_variables(g, cycles, pairs);
        std::vector<std::string> out;
        for (const auto& b : build_hyperedge_generators(g, vs, cycles, walks, pairs))
          out.push_back(format_binomial(vs, b));
        return out;
      },
      py::arg("graph"), py::arg("order") = "lex");

  m.def(
      "groebner_basis",
      [](const std::string& text, const std::string& order) {
        PipelineResult r = run_pipeline(graph_of(text), options_of(order));
        std::vector<std::string> out;
        for (const auto& b : r.basis.elements) out.push_back(format_binomial(r.vars, b));
        return out;
      },
      py::arg("graph"), py::arg("order") = "lex");

  m.def(
      "odd_cycle_condition",
      [](const std::string& text) { return check_odd_cycle_condition(graph_of(text)); },
      py::arg("graph"));

  m.def(
      "exceptional_pairs",
      [](const std::string& text) {
        Graph g = graph_of(text);
        auto pairs = find_exceptional_pairs(g, enumerate_simple_cycles(g));
        std::vector<std::pair<int, int>> out;
        for (const auto& pr : pairs) out.emplace_back(pr.i, pr.j);
        return out;
      },
      py::arg("graph"), "Pairs of odd-cycle indices violating the odd cycle condition.");
}
