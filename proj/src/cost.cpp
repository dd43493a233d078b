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


#include "cliqueq/cost.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cliqueq {

extern const char* const kReferenceTableJson;

std::string_view to_string(CostMethod m) {
  switch (m) {
    case CostMethod::StandardModel: return "standard_model";
    case CostMethod::QuditVChain: return "qudit_vchain";
    case CostMethod::QuditTree: return "qudit_tree";
  }
  return "standard_model";
}

CostReport analyze_qudit(const Circuit& lowered, CostMethod method, const ToffoliCensus& census) {
  if (lowered.has_abstract_gates()) throw std::invalid_argument("analyze_qudit needs a lowered circuit");
  CostReport r;
  r.method = method;
  r.wires = lowered.num_wires();
  r.census = census;
  for (const auto& g : lowered.gates()) {
    const auto wires = g.wires();
    if (wires.size() == 1) {
      ++r.one_qubit;
      continue;
    }
    bool qudit = false;
    for (Wire w : wires) qudit = qudit || g.max_level_on(w) >= 2;
    ++(qudit ? r.two_qudit : r.two_qubit);
  }
  r.size = static_cast<long>(lowered.size());
  r.depth = static_cast<long>(lowered.depth());
  return r;
}

CostReport analyze_standard(const ToffoliCensus& census, long extra_1q, long extra_2q,
                            const StandardCostModel& model) {
  CostReport r;
  r.method = CostMethod::StandardModel;
  r.census = census;
  r.one_qubit = extra_1q;
  r.two_qubit = extra_2q;
  r.depth = extra_1q + extra_2q;
  for (const auto& [arity, count] : census.by_arity) {
    const auto e = model.cost(arity);
    r.one_qubit += count * e.one_qubit;
    r.two_qubit += count * e.two_qubit;
    r.depth += count * e.depth;
    r.extrapolated = r.extrapolated || e.extrapolated;
  }
  r.size = r.one_qubit + r.two_qubit;
  return r;
}

Comparison compare(const CostReport& standard, const CostReport& qudit) {
  if (standard.size == 0) throw std::invalid_argument("cannot compare against an empty standard report");
  Comparison c;
  c.size_reduction_pct = 100.0 * (1.0 - static_cast<double>(qudit.size) / static_cast<double>(standard.size));
  if (standard.depth != 0) {
    c.depth_reduction_pct = 100.0 * (1.0 - static_cast<double>(qudit.depth) / static_cast<double>(standard.depth));
  }
  return c;
}

const ReferenceTable& ReferenceTable::builtin() {
  static const ReferenceTable ref = parse(kReferenceTableJson);
  return ref;
}

ReferenceTable ReferenceTable::parse(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  ReferenceTable ref;
  for (const auto& j : doc.at("rows")) {
    ReferenceRow r;
    r.table = j.at("table").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.wires = j.at("wires").get<long>();
    r.q1 = j.at("q1").get<long>();
    r.q2 = j.at("q2").get<long>();
    r.qd = j.at("qd").get<long>();
    r.size = j.at("size").get<long>();
    r.depth = j.at("depth").get<long>();
    ref.rows_.push_back(std::move(r));
  }
  return ref;
}

std::string ReferenceTable::table_key(OracleVariant oracle, PrepKind prep) {
  return std::string(to_string(oracle)) + "/" + std::string(to_string(prep));
}

std::optional<ReferenceRow> ReferenceTable::find(const std::string& table_key, const std::string& instance,
                                             const std::string& method) const {
  for (const auto& r : rows_)
    if (r.table == table_key && r.instance == instance && r.method == method) return r;
  return std::nullopt;
}

InstanceCost analyze_instance(const std::string& name, const Graph& g, std::size_t k, const GroverConfig& config,
                              const ReferenceTable* reference) {
  const GroverProgram program = build_grover_program(g, k, config);
  std::size_t t = config.iterations;
  if (t == 0) {
    const std::size_t marked = std::max<std::size_t>(1, enumerate_k_cliques(g, k).size());
    t = optimal_iterations(program.prep.search_space_size(), marked);
  }
  const Circuit full = assemble_grover_circuit(program, t);
  const ToffoliCensus census = toffoli_census(full);

  long extra_1q = 0;
  long extra_2q = 0;
  for (const auto& gate : full.gates()) {
    if (gate.kind == GateKind::Mct) continue;
    ++(gate.controls.empty() ? extra_1q : extra_2q);
  }

  InstanceCost out;
  out.instance = name;
  out.table_key = ReferenceTable::table_key(config.oracle, program.prep.kind);
  out.iterations = t;
  out.standard = analyze_standard(census, extra_1q, extra_2q);
  out.standard.wires = full.num_wires();
  const CostMethod method = config.lowering == Lowering::Tree ? CostMethod::QuditTree : CostMethod::QuditVChain;
  out.qudit = analyze_qudit(lower(full, config.lowering), method, census);
  out.comparison = compare(out.standard, out.qudit);
  if (reference != nullptr) {
    out.ref_standard = reference->find(out.table_key, name, "standard");
    out.ref_qudit = reference->find(out.table_key, name, "qudit");
  }
  return out;
}

TableFormat parse_table_format(std::string_view s) {
  if (s == "markdown" || s == "md") return TableFormat::Markdown;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown table format '" + std::string(s) + "'");
}

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Row {
  const InstanceCost* inst;
  const CostReport* report;
  const std::optional<ReferenceRow>* ref;
  bool qudit_side;
};

std::vector<Row> flatten(const std::vector<InstanceCost>& rows) {
  std::vector<Row> out;
  for (const auto& r : rows) {
    out.push_back({&r, &r.standard, &r.ref_standard, false});
    out.push_back({&r, &r.qudit, &r.ref_qudit, true});
  }
  return out;
}

std::vector<std::string> cells(const Row& row, bool with_ref) {
  const auto& c = *row.report;
  std::vector<std::string> v{row.inst->instance,
                             std::string(to_string(c.method)),
                             std::to_string(c.wires),
                             std::to_string(c.one_qubit),
                             std::to_string(c.two_qubit),
                             std::to_string(c.two_qudit),
                             std::to_string(c.size),
                             std::to_string(c.depth),
                             c.extrapolated ? "yes" : "no",
                             row.qudit_side ? pct(row.inst->comparison.size_reduction_pct) : "",
                             row.qudit_side ? pct(row.inst->comparison.depth_reduction_pct) : ""};
  if (with_ref) {
    const auto& p = *row.ref;
    v.push_back(p ? std::to_string(p->size) : "");
    v.push_back(p ? std::to_string(p->depth) : "");
    v.push_back(p ? std::to_string(c.size - p->size) : "");
  }
  return v;
}

std::vector<std::string> header(bool with_ref) {
  std::vector<std::string> h{"instance", "method",          "wires",          "q1",    "q2", "qd",
                             "size",     "depth",           "extrapolated",   "size_reduction_pct",
                             "depth_reduction_pct"};
  if (with_ref) {
    h.push_back("ref_size");
    h.push_back("ref_depth");
    h.push_back("size_delta");
  }
  return h;
}

nlohmann::json report_json(const Row& row) {
  const auto& c = *row.report;
  nlohmann::json j;
  j["instance"] = row.inst->instance;
  j["method"] = std::string(to_string(c.method));
  j["wires"] = c.wires;
  j["gates"] = {{"q1", c.one_qubit}, {"q2", c.two_qubit}, {"qd", c.two_qudit}};
  j["size"] = c.size;
  j["depth"] = c.depth;
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [arity, count] : c.census.by_arity) census[std::to_string(arity)] = count;
  j["census"] = census;
  j["extrapolated"] = c.extrapolated;
  j["iterations"] = row.inst->iterations;
  if (row.qudit_side) {
    j["reduction_pct"] = {{"size", row.inst->comparison.size_reduction_pct},
                          {"depth", row.inst->comparison.depth_reduction_pct}};
  }
  if (*row.ref) {
    const auto& p = **row.ref;
    j["paper_ref"] = {{"table", p.table}, {"wires", p.wires}, {"gates", {{"q1", p.q1}, {"q2", p.q2}, {"qd", p.qd}}},
                      {"size", p.size},   {"depth", p.depth}};
  }
  return j;
}

}  // namespace

std::string emit_table(const std::vector<InstanceCost>& rows, TableFormat format) {
  bool with_ref = false;
  for (const auto& r : rows) with_ref = with_ref || r.ref_standard || r.ref_qudit;
  const auto flat = flatten(rows);

  if (format == TableFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : flat) arr.push_back(report_json(row));
    return arr.dump(2) + "\n";
  }

  std::ostringstream out;
  const auto h = header(with_ref);
  if (format == TableFormat::Csv) {
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << "\n";
    };
    line(h);
    for (const auto& row : flat) line(cells(row, with_ref));
    return out.str();
  }

  auto line = [&](const std::vector<std::string>& v) {
    out << "|";
    for (const auto& s : v) out << " " << s << " |";
    out << "\n";
  };
  line(h);
  out << "|";
  for (std::size_t i = 0; i < h.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : flat) line(cells(row, with_ref));
  return out.str();
}

}  // namespace cliqueq
