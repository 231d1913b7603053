// Copyright 2026 The alphabound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "alphabound/bounds.hpp"
#include "alphabound/coeffs.hpp"
#include "alphabound/error.hpp"
#include "alphabound/exact.hpp"
#include "alphabound/families.hpp"
#include "alphabound/graph.hpp"
#include "alphabound/graph_io.hpp"
#include "alphabound/witness.hpp"

namespace py = pybind11;
using namespace alphabound;

namespace {

py::object big_int(const BigInt& x) {
  const std::string digits = x.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(big_int(numerator(r)), big_int(denominator(r)));
}

// Accepts int, Fraction, or a "p/q" string.
Rational rational_from(const py::handle& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

py::list fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const Rational& x : xs) out.append(fraction(x));
  return out;
}

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

py::dict trace_step(const TraceStep& s) {
  py::dict d;
  d["kind"] = std::string(to_string(s.kind));
  d["component_size"] = s.component_size;
  d["component_min"] = s.component_min;
  if (s.kind == StepKind::kPeel) {
    d["u"] = s.u;
    d["degree"] = s.degree;
    d["neighbors"] = s.neighbors;
    d["isolated"] = s.isolated;
    d["spawned"] = s.spawned;
    d["peel_weight"] = fraction(s.peel_weight);
  }
  d["selected"] = s.selected;
  d["weight"] = fraction(s.weight);
  return d;
}

py::dict checks_dict(const WitnessChecks& c) {
  py::dict d;
  d["independent"] = c.independent;
  d["certified"] = c.certified;
  d["peel_identity"] = c.peel_identity;
  d["accounting"] = c.accounting;
  d["local_steps"] = c.local_steps;
  d["isolated_independent"] = c.isolated_independent;
  return d;
}

}  // namespace

PYBIND11_MODULE(_alphabound, m) {
  m.doc() = "Degree-weighted lower bounds on the independence number";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ClassError>(m, "ClassError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::object exc = py::reinterpret_borrow<py::object>(budget.ptr())(e.what());
      exc.attr("best") = py::cast(e.best());
      PyErr_SetObject(budget.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("min_degree", &Graph::min_degree)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
             const auto nb = g.neighbors(v);
             return VertexSet(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("induced_subgraph",
           [](const Graph& g, const VertexSet& vs) { return g.induced_subgraph(vs); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::num_vertices)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<EulerLinear>(m, "EulerLinear")
      .def(py::init([](const py::object& a, const py::object& b) {
             return EulerLinear(rational_from(a), rational_from(b));
           }),
           py::arg("a"), py::arg("b") = 0)
      .def_property_readonly("a", [](const EulerLinear& x) { return fraction(x.rational_part()); })
      .def_property_readonly("b",
                             [](const EulerLinear& x) { return fraction(x.inverse_e_part()); })
      .def("to_decimal", &EulerLinear::to_decimal, py::arg("digits") = 12)
      .def("sign", &EulerLinear::sign)
      .def("__float__", &EulerLinear::to_double)
      .def("__str__", &EulerLinear::to_string)
      .def("__repr__", [](const EulerLinear& x) { return "EulerLinear(" + x.to_string() + ")"; })
      .def("__add__", [](const EulerLinear& x, const EulerLinear& y) { return x + y; })
      .def("__sub__", [](const EulerLinear& x, const EulerLinear& y) { return x - y; })
      .def("__neg__", [](const EulerLinear& x) { return -x; })
      .def("__eq__", [](const EulerLinear& x, const EulerLinear& y) { return x == y; })
      .def("__lt__", [](const EulerLinear& x, const EulerLinear& y) { return x < y; })
      .def("__le__", [](const EulerLinear& x, const EulerLinear& y) { return x <= y; })
      .def("__gt__", [](const EulerLinear& x, const EulerLinear& y) { return x > y; })
      .def("__ge__", [](const EulerLinear& x, const EulerLinear& y) { return x >= y; })
      .def("__hash__", [](const EulerLinear& x) { return py::hash(py::str(x.to_string())); });

  // graph properties and io
  m.def("parse_graph", [](const std::string& text) {
    LabeledGraph lg = parse_graph(text);
    return py::make_tuple(std::move(lg.graph), lg.labels);
  });
  m.def("read_graph", [](const std::string& path) {
    LabeledGraph lg = read_graph_file(path);
    return py::make_tuple(std::move(lg.graph), lg.labels);
  });
  m.def("write_edge_list", &write_edge_list, py::arg("graph"), py::arg("header") = "");
  m.def("degree_profile", [](const Graph& g) {
    const DegreeProfile p = degree_profile(g);
    std::vector<std::size_t> counts;
    for (const auto& c : p.classes) counts.push_back(c.size());
    return counts;
  });
  m.def("is_in_class", &is_in_class_G_delta, py::arg("graph"), py::arg("delta"));
  m.def("class_violation", &class_violation);

  // coefficients
  m.def("c_sequence", [](int delta) { return fractions(c_sequence(delta).values); });
  m.def("c_explicit", [](int i, int delta) { return fraction(c_explicit(i, delta)); });
  m.def(
      "corollary1_sequence",
      [](int delta, const py::object& c_delta) {
        return fractions(corollary1_sequence(delta, rational_from(c_delta)).values);
      },
      py::arg("delta"), py::arg("c_delta"));
  m.def("d_sequence", [](int delta_prime) { return d_sequence(delta_prime).values; });
  m.def("d_closed_form", &d_closed_form);

  // bounds
  m.def("bound_brooks", [](const Graph& g) { return fraction(bound_brooks(g)); });
  m.def("bound_theorem2", [](const Graph& g) { return fraction(bound_theorem2(g)); });
  m.def("bound_theorem4",
        [](const Graph& g, int delta) { return fraction(bound_theorem4(g, delta)); });
  m.def("bound_theorem5", &bound_theorem5);
  m.def("bound_caro_wei", [](const Graph& g) { return fraction(bound_caro_wei(g)); });
  m.def(
      "compute_bounds",
      [](const Graph& g, std::optional<std::pair<int, int>> delta_range) {
        const BoundReport r = compute_bounds(g, "", delta_range);
        py::dict theorem4;
        for (const auto& [delta, value] : r.bound3) theorem4[py::int_(delta)] = fraction(value);
        py::dict d;
        d["delta_max"] = r.delta_max;
        d["brooks"] = fraction(r.bound1);
        d["theorem2"] = fraction(r.bound2);
        d["theorem4"] = theorem4;
        d["theorem5"] = r.bound4;
        d["caro_wei"] = fraction(r.caro_wei);
        d["best"] = r.best;
        return d;
      },
      py::arg("graph"), py::arg("delta_range") = py::none());

  // exact
  m.def(
      "exact_alpha",
      [](const Graph& g, std::uint64_t budget) {
        ExactResult r;
        {
          py::gil_scoped_release release;
          r = exact_alpha(g, budget);
        }
        py::dict d;
        d["alpha"] = r.alpha;
        d["optimal_set"] = r.optimal_set;
        d["nodes_explored"] = r.nodes_explored;
        return d;
      },
      py::arg("graph"), py::arg("budget") = kDefaultNodeBudget);
  m.def("is_independent",
        [](const Graph& g, const VertexSet& s) { return is_independent(g, s); });

  // witness
  m.def("witness_theorem2", [](const Graph& g) {
    const WitnessResult w = witness_theorem2(g);
    py::list trace;
    for (const TraceStep& s : w.trace) trace.append(trace_step(s));
    py::dict d;
    d["independent_set"] = w.independent_set;
    d["certified_bound"] = fraction(w.certified_bound);
    d["checks"] = checks_dict(w.checks);
    d["ok"] = w.checks.all();
    d["trace"] = trace;
    return d;
  });
  m.def("check_kp_hypothesis", [](const Graph& g, const py::sequence& weights) {
    WeightAssignment w;
    for (const auto& x : weights) w.weights.push_back(rational_from(x));
    const KpCheck k = check_kp_hypothesis(g, w);
    py::dict d;
    d["holds"] = k.holds;
    d["violating_vertex"] = k.violating_vertex ? py::cast(*k.violating_vertex) : py::none();
    d["violating_clique"] = k.violating_clique ? py::cast(*k.violating_clique) : py::none();
    d["total"] = fraction(k.total);
    return d;
  });

  // generators
  m.def("gen_regular_blocks", &gen_regular_blocks, py::arg("delta"), py::arg("template"));
  m.def("circulant_template", &circulant_template, py::arg("k"), py::arg("delta"));
  m.def("gen_chain_A", &gen_chain_A, py::arg("delta"), py::arg("k"));
  m.def("gen_attach_B", &gen_attach_B, py::arg("delta"), py::arg("k"), py::arg("j"));
  m.def("gen_gstar", &gen_gstar, py::arg("n"));
  m.def("gen_random_connected", &gen_random_connected, py::arg("n"), py::arg("delta"),
        py::arg("seed"), py::arg("max_retries") = 1000);
  m.def("gen_random_regular", &gen_random_regular, py::arg("n"), py::arg("delta"),
        py::arg("seed"));
}
