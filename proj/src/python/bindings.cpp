// Copyright 2026 The misgraph Authors
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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "misgraph/bigcount.hpp"
#include "misgraph/constructions.hpp"
#include "misgraph/gadget_search.hpp"
#include "misgraph/gadgets.hpp"
#include "misgraph/graph_io.hpp"
#include "misgraph/oracle.hpp"
#include "misgraph/synthesizer.hpp"

namespace py = pybind11;
using namespace misgraph;

namespace {

py::int_ to_py(const BigCount& v) { return py::int_(py::str(to_decimal(v))); }

BigCount from_py(const py::int_& v) {
  const std::string text = py::str(v);
  if (!text.empty() && text.front() == '-') throw py::value_error("count must be non-negative");
  return parse_count(text);
}

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

BipartiteGraph make_graph(std::size_t left, std::size_t right,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  return BipartiteGraph(left, right, edges);
}

py::dict result_dict(const RealizationResult& r) {
  py::dict d;
  d["graph"] = r.graph;
  d["target"] = to_py(r.target);
  d["ledger"] = to_py(ledger_to_json(r.ledger));
  d["report"] = to_py(report_to_json(vertex_report(r)));
  return d;
}

py::dict gadget_dict(const MarkedGadget& g) {
  py::dict d;
  d["name"] = g.name;
  d["graph"] = g.graph;
  d["u1"] = g.u1.members();
  d["u2"] = g.u2.members();
  d["h_prime"] = to_py(g.h_prime);
  d["h_dprime"] = to_py(g.h_dprime);
  return d;
}

}  // namespace

PYBIND11_MODULE(_misgraph, m) {
  m.doc() = "Bipartite graphs with a prescribed number of maximal independent sets";

  py::register_exception<OracleCapExceeded>(m, "OracleCapExceeded");
  py::register_exception<GraphParseError>(m, "GraphParseError", PyExc_ValueError);

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init(&make_graph), py::arg("left"), py::arg("right"), py::arg("edges"))
      .def_property_readonly("left_size", &BipartiteGraph::left_size)
      .def_property_readonly("right_size", &BipartiteGraph::right_size)
      .def_property_readonly("vertex_count", &BipartiteGraph::vertex_count)
      .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
      .def("edges", &BipartiteGraph::edges)
      .def("has_edge", &BipartiteGraph::has_edge)
      .def("has_isolated_vertices", &BipartiteGraph::has_isolated_vertices)
      .def("to_json", [](const BipartiteGraph& g) { return write_json(g); })
      .def("to_dimacs", [](const BipartiteGraph& g) { return write_dimacs(g); })
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def(py::self == py::self)
      .def("__repr__", [](const BipartiteGraph& g) {
        return "BipartiteGraph(left=" + std::to_string(g.left_size()) +
               ", right=" + std::to_string(g.right_size()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("count_mis", [](const BipartiteGraph& g) { return to_py(count_mis(g)); }, py::arg("graph"));
  m.def("count_is", [](const BipartiteGraph& g) { return to_py(count_is(g)); }, py::arg("graph"));

  m.def(
      "realize", [](const py::int_& n) { return result_dict(default_synthesizer().realize(from_py(n))); },
      py::arg("n"), "Graph with exactly n maximal independent sets, plus its ledger and report.");
  m.def(
      "realize_pattern",
      [](const std::string& spec) {
        return result_dict(default_synthesizer().realize_pattern(BinaryPattern::parse(spec)));
      },
      py::arg("pattern"), "Realise the integer whose binary form is a pattern like '101^3,01^5'.");

  m.def("gadget_family", [] {
    const GadgetFamily& f = default_synthesizer().family();
    py::dict d;
    py::list members;
    for (const auto& g : f.members) members.append(gadget_dict(g));
    d["members"] = members;
    d["n0"] = f.n0;
    d["gamma"] = f.gamma;
    return d;
  });

  m.def(
      "search_gadgets",
      [](std::size_t max_vertices, std::size_t max_part) {
        py::list out;
        for (const auto& g : enumerate_marked_gadgets({max_vertices, max_part, 0})) {
          out.append(gadget_dict(g));
        }
        return out;
      },
      py::arg("max_vertices"), py::arg("max_part") = 0);

  m.def("staircase_graph", &staircase_graph, py::arg("s"), py::arg("t"));
  m.def("staircase_count", [](std::uint64_t s, std::uint64_t t) { return to_py(staircase_count(s, t)); },
        py::arg("s"), py::arg("t"));
  m.def("mersenne_forest", &mersenne_forest, py::arg("t"));
}
