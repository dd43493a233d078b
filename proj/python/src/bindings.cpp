// Copyright 2026 The cliqueq Authors
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


#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "cliqueq/cost.hpp"
#include "cliqueq/decompose.hpp"
#include "cliqueq/graph.hpp"
#include "cliqueq/grover.hpp"
#include "cliqueq/oracle.hpp"
#include "cliqueq/prep.hpp"
#include "cliqueq/sim.hpp"

namespace py = pybind11;
using namespace cliqueq;

// VertexSet <-> sorted list of ints.
namespace pybind11::detail {
template <>
struct type_caster<VertexSet> {
  PYBIND11_TYPE_CASTER(VertexSet, const_name("list[int]"));

  bool load(handle src, bool convert) {
    make_caster<std::set<Vertex>> inner;
    if (!inner.load(src, convert)) return false;
    value = VertexSet(cast_op<std::set<Vertex>&&>(std::move(inner)));
    return true;
  }

  static handle cast(const VertexSet& v, return_value_policy, handle) {
    list out;
    for (Vertex x : v.members()) out.append(x);
    return out.release();
  }
};
}  // namespace pybind11::detail

namespace {

GroverConfig make_config(const std::optional<std::string>& prep, const std::string& oracle,
                         const std::string& lowering, const std::string& diffuser, const std::string& backend,
                         std::size_t shots, std::uint64_t seed, std::size_t iterations, std::size_t max_rounds) {
  GroverConfig c;
  if (prep) c.prep = parse_prep_kind(*prep);
  c.oracle = parse_oracle_variant(oracle);
  c.lowering = parse_lowering(lowering);
  c.diffuser = parse_diffuser(diffuser);
  if (backend == "sparse") {
    c.backend = Backend::Sparse;
  } else if (backend == "dense") {
    c.backend = Backend::Dense;
  } else {
    throw std::invalid_argument("unknown backend '" + backend + "'");
  }
  c.shots = shots;
  c.seed = seed;
  c.iterations = iterations;
  c.max_boyer_rounds = max_rounds;
  return c;
}

py::dict result_dict(const SearchResult& r) {
  py::dict d;
  d["found"] = r.found;
  d["witness"] = r.witness;
  d["clique_size"] = r.clique_size;
  d["iterations_used"] = r.iterations_used;
  d["rounds"] = r.rounds;
  d["success_probability"] = r.success_probability;
  d["histogram"] = r.histogram;
  d["skipped_sizes"] = r.skipped_sizes;
  d["failed_sizes"] = r.failed_sizes;
  return d;
}

py::dict cost_dict(const CostReport& c) {
  py::dict d;
  d["method"] = std::string(to_string(c.method));
  d["wires"] = c.wires;
  d["q1"] = c.one_qubit;
  d["q2"] = c.two_qubit;
  d["qd"] = c.two_qudit;
  d["size"] = c.size;
  d["depth"] = c.depth;
  d["census"] = c.census.by_arity;
  d["extrapolated"] = c.extrapolated;
  return d;
}

#define CLIQUEQ_SEARCH_ARGS                                                                                 \
  py::arg("prep") = py::none(), py::arg("oracle") = "checking", py::arg("lowering") = "vchain",             \
      py::arg("diffuser") = "auto", py::arg("backend") = "sparse", py::arg("shots") = 1024, py::arg("seed") = 0, \
      py::arg("iterations") = 0, py::arg("max_rounds") = 8

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grover k-clique search with qudit-assisted Toffoli lowering";

  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_static("complete", &Graph::complete)
      .def_static("edgeless", &Graph::edgeless)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("format_graph", &format_graph, py::arg("graph"));
  m.def("is_clique", &is_clique, py::arg("graph"), py::arg("vertices"));
  m.def("enumerate_k_cliques", &enumerate_k_cliques, py::arg("graph"), py::arg("k"));
  m.def("max_clique_bruteforce", &max_clique_bruteforce, py::arg("graph"));

  m.def(
      "kclique",
      [](const Graph& g, std::size_t k, const std::optional<std::string>& prep, const std::string& oracle,
         const std::string& lowering, const std::string& diffuser, const std::string& backend, std::size_t shots,
         std::uint64_t seed, std::size_t iterations, std::size_t max_rounds, const std::string& mode) {
        const auto c = make_config(prep, oracle, lowering, diffuser, backend, shots, seed, iterations, max_rounds);
        SearchResult r;
        if (mode == "known") {
          r = grover_known_m(g, k, c);
        } else if (mode == "unknown") {
          r = grover_unknown_m(g, k, c);
        } else {
          throw std::invalid_argument("mode must be 'known' or 'unknown'");
        }
        return result_dict(r);
      },
      py::arg("graph"), py::arg("k"), CLIQUEQ_SEARCH_ARGS, py::arg("mode") = "known");

  m.def(
      "max_clique",
      [](const Graph& g, const std::optional<std::string>& prep, const std::string& oracle,
         const std::string& lowering, const std::string& diffuser, const std::string& backend, std::size_t shots,
         std::uint64_t seed, std::size_t iterations, std::size_t max_rounds) {
        return result_dict(
            max_clique(g, make_config(prep, oracle, lowering, diffuser, backend, shots, seed, iterations, max_rounds)));
      },
      py::arg("graph"), CLIQUEQ_SEARCH_ARGS);

  m.def(
      "optimal_iterations", &optimal_iterations, py::arg("search_space"), py::arg("marked"));

  m.def(
      "decompose",
      [](std::size_t controls, const std::string& lowering) {
        std::vector<Wire> ctl(controls);
        for (std::size_t i = 0; i < controls; ++i) ctl[i] = i;
        Circuit c(controls + 1);
        c.append(Gate::mct(controls, ctl));
        const Circuit l = lower(c, parse_lowering(lowering));
        const CostReport r = analyze_qudit(l);
        py::dict d;
        d["size"] = r.size;
        d["depth"] = r.depth;
        d["q1"] = r.one_qubit;
        d["q2"] = r.two_qubit;
        d["qd"] = r.two_qudit;
        d["max_dim"] = l.max_dim();
        d["circuit"] = serialize(l);
        return d;
      },
      py::arg("controls"), py::arg("lowering") = "vchain");

  m.def(
      "standard_cost",
      [](int controls) {
        const StandardCostEntry e = standard_cost(controls);
        py::dict d;
        d["size"] = e.size;
        d["depth"] = e.depth;
        d["q1"] = e.one_qubit;
        d["q2"] = e.two_qubit;
        d["extrapolated"] = e.extrapolated;
        return d;
      },
      py::arg("controls"));

  m.def(
      "prep_amplitudes",
      [](const std::string& kind, std::size_t n, std::size_t k) {
        const PrepKind pk = parse_prep_kind(kind);
        const Circuit c = pk == PrepKind::Dicke ? dicke_prep(n, k)
                          : pk == PrepKind::WState ? w_state_prep(n)
                                                   : hadamard_prep(n);
        const StateVector psi = run(lower(c, Lowering::VChain), 0);
        const RadixIndex& idx = psi.index();
        py::dict out;
        for (std::uint64_t i = 0; i < psi.amplitudes().size(); ++i) {
          if (std::abs(psi[i]) < 1e-12) continue;
          std::string bits;
          for (int d : idx.decode(i)) bits += static_cast<char>('0' + d);
          out[py::str(bits)] = psi[i];
        }
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("k") = 0);

  m.def(
      "oracle_census",
      [](const Graph& g, std::size_t k, const std::string& oracle, bool count_nodes) {
        const OracleCircuit oc = build_oracle(g, k, {parse_oracle_variant(oracle), count_nodes});
        py::dict d;
        d["wires"] = oc.layout.total_wires;
        d["census"] = toffoli_census(oc.circuit).by_arity;
        d["warnings"] = oc.warnings;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("oracle") = "checking", py::arg("count_nodes") = true);

  m.def(
      "report",
      [](const std::vector<std::pair<std::string, Graph>>& instances, std::size_t k,
         const std::optional<std::string>& prep, const std::string& oracle, const std::string& lowering,
         std::size_t iterations, const std::string& format, bool with_reference) {
        GroverConfig c = make_config(prep, oracle, lowering, "auto", "sparse", 1, 0, iterations, 8);
        std::vector<InstanceCost> rows;
        for (const auto& [name, g] : instances)
          rows.push_back(analyze_instance(name, g, k, c, with_reference ? &ReferenceTable::builtin() : nullptr));
        return emit_table(rows, parse_table_format(format));
      },
      py::arg("instances"), py::arg("k"), py::arg("prep") = py::none(), py::arg("oracle") = "checking",
      py::arg("lowering") = "vchain", py::arg("iterations") = 0, py::arg("format") = "json",
      py::arg("with_reference") = false);

  m.def(
      "instance_cost",
      [](const Graph& g, std::size_t k, const std::optional<std::string>& prep, const std::string& oracle,
         const std::string& lowering, std::size_t iterations) {
        const InstanceCost r = analyze_instance("instance", g, k,
                                                make_config(prep, oracle, lowering, "auto", "sparse", 1, 0, iterations, 8));
        py::dict d;
        d["iterations"] = r.iterations;
        d["standard"] = cost_dict(r.standard);
        d["qudit"] = cost_dict(r.qudit);
        d["size_reduction_pct"] = r.comparison.size_reduction_pct;
        d["depth_reduction_pct"] = r.comparison.depth_reduction_pct;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("prep") = py::none(), py::arg("oracle") = "checking",
      py::arg("lowering") = "vchain", py::arg("iterations") = 0);
}
