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

#include "cliqueq/decompose.hpp"

#include <algorithm>
#include <span>

namespace cliqueq {

std::string_view to_string(Lowering l) { return l == Lowering::VChain ? "vchain" : "tree"; }

Lowering parse_lowering(std::string_view s) {
  if (s == "vchain") return Lowering::VChain;
  if (s == "tree") return Lowering::Tree;
  throw std::invalid_argument("unknown lowering '" + std::string(s) + "'");
}

namespace {

void require_abstract_binary(const Gate& mct, const WireTable& wires) {
  if (mct.kind != GateKind::Mct) throw CircuitError("lowering expects an abstract MCT gate");
  if (mct.controls.empty()) throw CircuitError("MCT needs at least one control");
  for (const auto& c : mct.controls) {
    if (wires.dim(c.wire) != 2 || c.value != 1) {
      throw CircuitError("MCT control on wire " + std::to_string(c.wire) + " is not a binary |1> trigger");
    }
  }
  if (wires.dim(mct.target) != 2) throw CircuitError("MCT target must be a binary wire");
}

// Builds compute gates, the target flip, and the mirrored uncompute.
Circuit assemble(const WireTable& base, std::vector<int> dims, const std::vector<Gate>& compute, Gate flip) {
  WireTable wt = base;
  for (std::size_t w = 0; w < dims.size(); ++w) wt.dims[w] = std::max(wt.dims[w], dims[w]);
  Circuit out(wt);
  for (const auto& g : compute) out.append(g);
  out.append(std::move(flip));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) out.append(it->inverse());
  return out;
}

}  // namespace

Circuit lower_vchain(const Gate& mct, const WireTable& wires) {
  require_abstract_binary(mct, wires);
  const auto& ctl = mct.controls;
  const std::size_t n = ctl.size();
  if (n == 1) {
    Circuit out(wires);
    out.append(Gate::x(mct.target, {{ctl[0].wire, 1}}));
    return out;
  }

  std::vector<int> dims(wires.size(), 2);
  std::vector<Gate> compute;
  compute.push_back(Gate::increment(ctl[1].wire, +1, 3, {{ctl[0].wire, 1}}));
  dims[ctl[1].wire] = 3;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    compute.push_back(Gate::increment(ctl[i + 1].wire, +1, 3, {{ctl[i].wire, 2}}));
    dims[ctl[i + 1].wire] = 3;
  }
  return assemble(wires, dims, compute, Gate::x(mct.target, {{ctl[n - 1].wire, 2}}));
}

Circuit lower_dary(const Gate& mct, const WireTable& wires, int d) {
  if (mct.controls.size() != 2) throw CircuitError("d-ary Toffoli lowering needs exactly two controls");
  if (d < 2 || d + 1 > kMaxWireDim) {
    throw CircuitError("d-ary lowering with d=" + std::to_string(d) + " would exceed the ququart cap");
  }
  const Wire c1 = mct.controls[0].wire;
  const Wire c2 = mct.controls[1].wire;
  for (Wire w : {c1, c2, mct.target}) {
    if (w >= wires.size()) throw CircuitError("wire out of range");
    if (wires.dim(w) != d) throw CircuitError("d-ary lowering expects dimension-" + std::to_string(d) + " wires");
  }
  std::vector<int> dims(wires.size(), 2);
  dims[c2] = d + 1;
  const std::vector<Gate> compute{Gate::increment(c2, +1, d + 1, {{c1, d - 1}})};
  return assemble(wires, dims, compute, Gate::increment(mct.target, +1, d, {{c2, d}}));
}

namespace {

std::size_t tree_capacity(long t) {
  if (t < 0) return 0;
  std::size_t prev2 = 0, prev1 = 1;  // F(-1), F(0)
  for (long i = 1; i <= t; ++i) {
    const std::size_t next = 1 + prev1 + prev2;
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

struct Subtree {
  Wire root;
  int mark;
};

Subtree build_tree(std::span<const Wire> ws, long steps, std::vector<Gate>& out, std::vector<int>& dims) {
  const Wire root = ws.back();
  if (ws.size() == 1) return {root, 1};

  const auto rest = ws.first(ws.size() - 1);
  const std::size_t late = std::min(rest.size(), tree_capacity(steps - 1));
  const std::size_t early = rest.size() - late;

  std::vector<Subtree> children;
  if (early > 0) children.push_back(build_tree(rest.first(early), steps - 2, out, dims));
  children.push_back(build_tree(rest.last(late), steps - 1, out, dims));

  int mark = 1;
  for (const auto& child : children) {
    const int modulus = mark + 2;  // 1 -> 2 on a qutrit, then 2 -> 3 on a ququart
    out.push_back(Gate::increment(root, +1, modulus, {{child.root, child.mark}}));
    dims[root] = std::max(dims[root], modulus);
    ++mark;
  }
  return {root, mark};
}

}  // namespace

std::size_t tree_steps(std::size_t n_controls) {
  long t = 0;
  while (tree_capacity(t) < n_controls) ++t;
  return static_cast<std::size_t>(t);
}

Circuit lower_tree(const Gate& mct, const WireTable& wires) {
  require_abstract_binary(mct, wires);
  const std::size_t n = mct.controls.size();
  if (n < 2) throw CircuitError("tree lowering needs at least two controls");

  std::vector<Wire> ws;
  for (const auto& c : mct.controls) ws.push_back(c.wire);
  std::vector<int> dims(wires.size(), 2);
  std::vector<Gate> compute;
  const Subtree top = build_tree(ws, static_cast<long>(tree_steps(n)), compute, dims);
  return assemble(wires, dims, compute, Gate::x(mct.target, {{top.root, top.mark}}));
}

Circuit lower(const Circuit& c, Lowering method) {
  std::vector<int> dims = c.wires().dims;
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::Mct) {
      gates.push_back(g);
      continue;
    }
    const Circuit frag = (method == Lowering::Tree && g.controls.size() >= 2) ? lower_tree(g, c.wires())
                                                                             : lower_vchain(g, c.wires());
    for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = std::max(dims[w], frag.wires().dims[w]);
    gates.insert(gates.end(), frag.gates().begin(), frag.gates().end());
  }
  WireTable wt = c.wires();
  wt.dims = dims;
  Circuit out(wt);
  for (auto& g : gates) out.append(std::move(g));
  return out;
}

StandardCostModel::StandardCostModel()
    : entries_{{1, {1, 1, 1, 0, 1, false}},
               {2, {2, 15, 12, 9, 6, false}},
               {3, {3, 27, 22, 14, 13, false}},
               {4, {4, 77, 60, 48, 29, false}}} {}

StandardCostModel::StandardCostModel(std::map<int, StandardCostEntry> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw std::invalid_argument("cost model needs at least two rows");
}

StandardCostEntry StandardCostModel::cost(int n) const {
  if (n <= 0) throw std::invalid_argument("standard cost needs n_controls >= 1");
  if (auto it = entries_.find(n); it != entries_.end()) return it->second;

  const auto hi = std::prev(entries_.end());
  const auto lo = std::prev(hi);
  if (n < hi->first) throw std::invalid_argument("no cost row for " + std::to_string(n) + " controls");
  const long steps = n - hi->first;
  StandardCostEntry e;
  e.n_controls = n;
  e.size = hi->second.size + steps * (hi->second.size - lo->second.size);
  e.depth = hi->second.depth + steps * (hi->second.depth - lo->second.depth);
  e.one_qubit = hi->second.one_qubit + steps * (hi->second.one_qubit - lo->second.one_qubit);
  e.two_qubit = hi->second.two_qubit + steps * (hi->second.two_qubit - lo->second.two_qubit);
  e.extrapolated = true;
  return e;
}

StandardCostEntry standard_cost(int n_controls, const StandardCostModel& model) { return model.cost(n_controls); }

}  // namespace cliqueq
