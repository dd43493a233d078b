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

#include "cliqueq/oracle.hpp"

#include <algorithm>

namespace cliqueq {

std::string_view to_string(OracleVariant v) { return v == OracleVariant::Checking ? "checking" : "increment"; }

OracleVariant parse_oracle_variant(std::string_view s) {
  if (s == "checking") return OracleVariant::Checking;
  if (s == "increment") return OracleVariant::Increment;
  throw std::invalid_argument("unknown oracle kind '" + std::string(s) + "'");
}

std::size_t counter_width(std::size_t max_count) {
  if (max_count < 1) throw std::invalid_argument("counter must hold at least 1");
  std::size_t w = 0;
  while ((std::size_t{1} << w) <= max_count) ++w;
  return w;
}

OracleLayout OracleLayout::build(std::size_t n, std::size_t k, const OracleKind& kind) {
  if (k < 2 || k > n) throw std::invalid_argument("clique oracle needs 2 <= k <= n");
  OracleLayout l;
  Wire next = 0;
  for (std::size_t v = 0; v < n; ++v) l.vertex_wires.push_back(next++);
  for (std::size_t i = 0; i < counter_width(binomial(k, 2)); ++i) l.edge_counter.push_back(next++);
  l.edge_flag = next++;
  if (kind.count_nodes) {
    // Sized for the full vertex count so over-weight inputs cannot alias k.
    for (std::size_t i = 0; i < counter_width(n); ++i) l.node_counter.push_back(next++);
    l.node_flag = next++;
  }
  if (kind.variant == OracleVariant::Increment) l.edge_exists = next++;
  l.target = next++;
  l.total_wires = next;
  return l;
}

std::vector<WireRole> OracleLayout::roles() const {
  std::vector<WireRole> r(total_wires, WireRole::Other);
  for (Wire w : vertex_wires) r[w] = WireRole::Vertex;
  for (Wire w : edge_counter) r[w] = WireRole::EdgeCounter;
  r[edge_flag] = WireRole::EdgeFlag;
  for (Wire w : node_counter) r[w] = WireRole::NodeCounter;
  if (node_flag) r[*node_flag] = WireRole::NodeFlag;
  if (edge_exists) r[*edge_exists] = WireRole::EdgeExists;
  r[target] = WireRole::Target;
  return r;
}

std::vector<Wire> OracleLayout::ancillas() const {
  std::vector<Wire> out;
  for (Wire w = vertex_wires.size(); w < total_wires; ++w) out.push_back(w);
  return out;
}

Circuit controlled_increment(std::size_t num_wires, std::span<const Wire> counter,
                             const std::vector<Control>& controls) {
  if (counter.empty()) throw std::invalid_argument("counter width must be >= 1");
  std::vector<Wire> ctl;
  for (const auto& c : controls) {
    if (c.value != 1) throw std::invalid_argument("counter increments trigger on |1> controls");
    if (std::find(counter.begin(), counter.end(), c.wire) != counter.end()) {
      throw std::invalid_argument("counter overlaps its controls");
    }
    ctl.push_back(c.wire);
  }
  Circuit out(num_wires);
  for (std::size_t j = counter.size(); j-- > 0;) {
    std::vector<Wire> wires = ctl;
    wires.insert(wires.end(), counter.begin(), counter.begin() + static_cast<std::ptrdiff_t>(j));
    if (wires.empty()) {
      out.append(Gate::x(counter[j]));
    } else {
      out.append(Gate::mct(counter[j], wires));
    }
  }
  return out;
}

Circuit equality_compare(std::size_t num_wires, std::span<const Wire> counter, std::size_t constant, Wire flag) {
  if (counter.empty()) throw std::invalid_argument("counter width must be >= 1");
  if (counter.size() < 64 && constant >= (std::size_t{1} << counter.size())) {
    throw std::invalid_argument("constant does not fit in the counter");
  }
  Circuit out(num_wires);
  std::vector<Wire> zeros;
  for (std::size_t b = 0; b < counter.size(); ++b)
    if (((constant >> b) & 1U) == 0) zeros.push_back(counter[b]);
  for (Wire w : zeros) out.append(Gate::x(w));
  out.append(Gate::mct(flag, std::vector<Wire>(counter.begin(), counter.end())));
  for (Wire w : zeros) out.append(Gate::x(w));
  return out;
}

namespace {

void append_node_check(Circuit& compute, const OracleLayout& l, std::size_t k) {
  const std::size_t w = l.total_wires;
  for (Wire v : l.vertex_wires) compute.extend(controlled_increment(w, l.node_counter, {{v, 1}}));
  compute.extend(equality_compare(w, l.node_counter, k, *l.node_flag));
}

OracleCircuit finish(const Graph& g, std::size_t k, const OracleKind& kind, const OracleLayout& l,
                     Circuit compute) {
  if (kind.count_nodes) append_node_check(compute, l, k);

  OracleCircuit out{l, kind, Circuit(l.total_wires), {}};
  if (binomial(k, 2) > g.num_edges()) {
    out.warnings.push_back("graph has " + std::to_string(g.num_edges()) + " edges but a " + std::to_string(k) +
                           "-clique needs " + std::to_string(binomial(k, 2)) + "; no state will be marked");
  }
  std::vector<Wire> flags{l.edge_flag};
  if (l.node_flag) flags.push_back(*l.node_flag);

  out.circuit.extend(compute);
  out.circuit.append(Gate::mct(l.target, flags));
  out.circuit.extend(inverse(compute));
  out.circuit.set_roles(l.roles());
  return out;
}

void check_args(const Graph& g, std::size_t k) {
  if (k < 2 || k > g.num_vertices()) throw std::invalid_argument("clique oracle needs 2 <= k <= n");
}

}  // namespace

OracleCircuit checking_oracle(const Graph& g, std::size_t k, const OracleKind& kind_in) {
  check_args(g, k);
  OracleKind kind = kind_in;
  kind.variant = OracleVariant::Checking;
  const auto l = OracleLayout::build(g.num_vertices(), k, kind);
  Circuit compute(l.total_wires);
  for (auto [u, v] : g.edges()) {
    compute.extend(controlled_increment(l.total_wires, l.edge_counter, {{u, 1}, {v, 1}}));
  }
  compute.extend(equality_compare(l.total_wires, l.edge_counter, binomial(k, 2), l.edge_flag));
  return finish(g, k, kind, l, std::move(compute));
}

OracleCircuit increment_oracle(const Graph& g, std::size_t k, const OracleKind& kind_in) {
  check_args(g, k);
  OracleKind kind = kind_in;
  kind.variant = OracleVariant::Increment;
  const auto l = OracleLayout::build(g.num_vertices(), k, kind);
  const Wire scratch = *l.edge_exists;
  Circuit compute(l.total_wires);
  for (auto [u, v] : g.edges()) {
    compute.append(Gate::mct(scratch, {u, v}));
    compute.extend(controlled_increment(l.total_wires, l.edge_counter, {{scratch, 1}}));
    compute.append(Gate::mct(scratch, {u, v}));
  }
  compute.extend(equality_compare(l.total_wires, l.edge_counter, binomial(k, 2), l.edge_flag));
  return finish(g, k, kind, l, std::move(compute));
}

OracleCircuit build_oracle(const Graph& g, std::size_t k, const OracleKind& kind) {
  return kind.variant == OracleVariant::Checking ? checking_oracle(g, k, kind) : increment_oracle(g, k, kind);
}

long ToffoliCensus::total() const {
  long t = 0;
  for (const auto& [arity, count] : by_arity) t += count;
  return t;
}

ToffoliCensus toffoli_census(const Circuit& c) {
  ToffoliCensus census;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::Mct) ++census.by_arity[static_cast<int>(g.controls.size())];
  return census;
}

}  // namespace cliqueq
