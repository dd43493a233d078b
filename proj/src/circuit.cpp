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

#include "cliqueq/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace cliqueq {

std::string_view to_string(WireRole role) {
  switch (role) {
    case WireRole::Vertex: return "vertex";
    case WireRole::EdgeCounter: return "edge-counter";
    case WireRole::EdgeFlag: return "edge-flag";
    case WireRole::NodeCounter: return "node-counter";
    case WireRole::NodeFlag: return "node-flag";
    case WireRole::EdgeExists: return "edge-exists";
    case WireRole::Target: return "target";
    case WireRole::Other: return "other";
  }
  return "other";
}

WireTable::WireTable(std::size_t count) : dims(count, 2), roles(count, WireRole::Other) {}

WireTable::WireTable(std::vector<int> d) : dims(std::move(d)), roles(dims.size(), WireRole::Other) {
  validate();
}

void WireTable::validate() const {
  if (roles.size() != dims.size()) throw CircuitError("wire role table size mismatch");
  for (int d : dims) {
    if (d < 2 || d > kMaxWireDim) throw CircuitError("wire dimension must be in [2,4], got " + std::to_string(d));
  }
}

bool is_single_unitary(GateKind kind) {
  return kind != GateKind::Increment && kind != GateKind::Mct;
}

Gate Gate::h(Wire t, std::vector<Control> c) { return Gate{GateKind::H, t, std::move(c)}; }
Gate Gate::x(Wire t, std::vector<Control> c) { return Gate{GateKind::X, t, std::move(c)}; }
Gate Gate::z(Wire t, std::vector<Control> c) { return Gate{GateKind::Z, t, std::move(c)}; }
Gate Gate::s(Wire t, std::vector<Control> c) { return Gate{GateKind::S, t, std::move(c)}; }
Gate Gate::sdg(Wire t, std::vector<Control> c) { return Gate{GateKind::Sdg, t, std::move(c)}; }

Gate Gate::ry(Wire t, double theta, std::vector<Control> c) {
  Gate g{GateKind::Ry, t, std::move(c)};
  g.angle = theta;
  return g;
}

Gate Gate::increment(Wire t, int delta, int modulus, std::vector<Control> c) {
  if (modulus < 2) throw CircuitError("increment modulus must be >= 2");
  Gate g{GateKind::Increment, t, std::move(c)};
  g.delta = delta;
  g.modulus = modulus;
  return g;
}

Gate Gate::mct(Wire t, const std::vector<Wire>& controls) {
  Gate g{GateKind::Mct, t, {}};
  for (Wire w : controls) g.controls.push_back({w, 1});
  return g;
}

std::vector<Wire> Gate::wires() const {
  std::vector<Wire> out;
  out.reserve(controls.size() + 1);
  for (const auto& c : controls) out.push_back(c.wire);
  out.push_back(target);
  return out;
}

bool Gate::touches(Wire w) const {
  if (target == w) return true;
  return std::any_of(controls.begin(), controls.end(), [w](const Control& c) { return c.wire == w; });
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::Ry: g.angle = -angle; break;
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::Increment: g.delta = -delta; break;
    default: break;  // H, X, Z and MCT are involutions
  }
  return g;
}

namespace {

std::vector<Control> sorted_controls(std::vector<Control> c) {
  std::sort(c.begin(), c.end());
  return c;
}

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

bool Gate::is_inverse_of(const Gate& other) const {
  if (target != other.target) return false;
  if (sorted_controls(controls) != sorted_controls(other.controls)) return false;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
      return other.kind == kind;
    case GateKind::S: return other.kind == GateKind::Sdg;
    case GateKind::Sdg: return other.kind == GateKind::S;
    case GateKind::Ry: return other.kind == GateKind::Ry && angle == -other.angle;
    case GateKind::Increment:
      return other.kind == GateKind::Increment && modulus == other.modulus &&
             positive_mod(delta + other.delta, modulus) == 0;
    case GateKind::Mct:
      return other.kind == GateKind::Mct;  // X-type, self-inverse
  }
  return false;
}

int Gate::max_level_on(Wire w) const {
  int level = -1;
  for (const auto& c : controls)
    if (c.wire == w) level = std::max(level, c.value);
  if (target == w) level = std::max(level, kind == GateKind::Increment ? modulus - 1 : 1);
  return level;
}

Circuit::Circuit(WireTable wires) : wires_(std::move(wires)) { wires_.validate(); }

void Circuit::check_gate(const Gate& g) const {
  const std::size_t n = wires_.size();
  if (g.target >= n) throw CircuitError("gate target wire " + std::to_string(g.target) + " out of range");
  std::vector<Wire> seen{g.target};
  for (const auto& c : g.controls) {
    if (c.wire >= n) throw CircuitError("control wire " + std::to_string(c.wire) + " out of range");
    if (c.value < 0 || c.value >= wires_.dims[c.wire]) {
      throw CircuitError("trigger value " + std::to_string(c.value) + " invalid on wire " +
                         std::to_string(c.wire) + " of dimension " + std::to_string(wires_.dims[c.wire]));
    }
    if (std::find(seen.begin(), seen.end(), c.wire) != seen.end()) {
      throw CircuitError("wire " + std::to_string(c.wire) + " used twice in one gate");
    }
    seen.push_back(c.wire);
  }
  if (g.kind == GateKind::Increment && g.modulus > wires_.dims[g.target]) {
    throw CircuitError("increment modulus " + std::to_string(g.modulus) + " exceeds dimension of wire " +
                       std::to_string(g.target));
  }
  if (g.kind == GateKind::Mct) {
    for (Wire w : g.wires()) {
      if (wires_.dims[w] != 2) throw CircuitError("abstract MCT must act on binary wires");
    }
  }
}

Circuit& Circuit::append(Gate g) {
  check_gate(g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  if (other.num_wires() != num_wires()) throw CircuitError("cannot extend with a circuit of different width");
  for (const auto& g : other.gates()) append(g);
  return *this;
}

void Circuit::raise_dims(const std::vector<int>& dims) {
  if (dims.size() != wires_.size()) throw CircuitError("dimension list has wrong length");
  for (std::size_t w = 0; w < dims.size(); ++w) wires_.dims[w] = std::max(wires_.dims[w], dims[w]);
  wires_.validate();
}

void Circuit::set_roles(std::vector<WireRole> roles) {
  if (roles.size() != wires_.size()) throw CircuitError("role list has wrong length");
  wires_.roles = std::move(roles);
}

std::size_t Circuit::depth() const {
  // Greedy ASAP layering: each gate lands one layer after the latest gate
  // sharing any of its wires.
  std::vector<std::size_t> wire_layer(wires_.size(), 0);
  std::size_t depth = 0;
  for (const auto& g : gates_) {
    std::size_t layer = 0;
    for (Wire w : g.wires()) layer = std::max(layer, wire_layer[w]);
    ++layer;
    for (Wire w : g.wires()) wire_layer[w] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

bool Circuit::has_abstract_gates() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::Mct; });
}

int Circuit::max_dim() const {
  return wires_.dims.empty() ? 0 : *std::max_element(wires_.dims.begin(), wires_.dims.end());
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.wires());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(it->inverse());
  return out;
}

Circuit cancel_adjacent_inverses(const Circuit& c) {
  std::vector<Gate> kept;
  kept.reserve(c.size());
  // For each wire, stack of indices into `kept` of gates touching it.
  std::vector<std::vector<std::size_t>> on_wire(c.num_wires());
  std::vector<bool> alive;

  auto last_alive = [&](Wire w) -> std::ptrdiff_t {
    auto& stack = on_wire[w];
    while (!stack.empty() && !alive[stack.back()]) stack.pop_back();
    return stack.empty() ? -1 : static_cast<std::ptrdiff_t>(stack.back());
  };

  for (const auto& g : c.gates()) {
    const auto ws = g.wires();
    std::ptrdiff_t prev = -1;
    for (Wire w : ws) prev = std::max(prev, last_alive(w));
    if (prev >= 0) {
      const Gate& p = kept[static_cast<std::size_t>(prev)];
      // p must be the latest gate on every wire of g, which holds when the
      // wire sets coincide and p is the latest on the union.
      auto pw = p.wires();
      auto gw = ws;
      std::sort(pw.begin(), pw.end());
      std::sort(gw.begin(), gw.end());
      if (pw == gw && g.is_inverse_of(p)) {
        alive[static_cast<std::size_t>(prev)] = false;
        continue;
      }
    }
    kept.push_back(g);
    alive.push_back(true);
    for (Wire w : ws) on_wire[w].push_back(kept.size() - 1);
  }

  Circuit out(c.wires());
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (alive[i]) out.append(kept[i]);
  return out;
}

namespace {

std::string_view kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Ry: return "ry";
    case GateKind::Increment: return "inc";
    case GateKind::Mct: return "mct";
  }
  return "?";
}

std::string format_angle(double a) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_gate(const Gate& g) {
  std::ostringstream out;
  out << kind_name(g.kind);
  if (g.kind == GateKind::Ry) out << ' ' << format_angle(g.angle);
  if (g.kind == GateKind::Increment) out << ' ' << (g.delta >= 0 ? "+" : "") << g.delta << " mod" << g.modulus;
  out << " @" << g.target;
  if (!g.controls.empty()) {
    out << " | ctrl";
    for (const auto& c : g.controls) out << " (" << c.wire << ',' << c.value << ')';
  }
  return out.str();
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "wires";
  for (int d : c.wires().dims) out << ' ' << d;
  out << '\n';
  for (const auto& g : c.gates()) out << format_gate(g) << '\n';
  return out.str();
}

namespace {

GateKind parse_kind(const std::string& s) {
  static const std::pair<const char*, GateKind> table[] = {
      {"h", GateKind::H},   {"x", GateKind::X},     {"z", GateKind::Z},   {"s", GateKind::S},
      {"sdg", GateKind::Sdg}, {"ry", GateKind::Ry}, {"inc", GateKind::Increment}, {"mct", GateKind::Mct}};
  for (auto [name, kind] : table)
    if (s == name) return kind;
  throw CircuitError("unknown gate kind '" + s + "'");
}

long parse_long(std::string_view s) {
  long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw CircuitError("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw CircuitError("empty circuit text");
  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "wires") throw CircuitError("circuit text must start with 'wires'");
  std::vector<int> dims;
  for (std::string d; header >> d;) dims.push_back(static_cast<int>(parse_long(d)));
  Circuit c{WireTable(dims)};

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tok;
    fields >> tok;
    Gate g{parse_kind(tok), 0, {}};
    if (g.kind == GateKind::Ry) {
      fields >> tok;
      double a = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), a);
      if (ec != std::errc()) throw CircuitError("bad angle '" + tok + "'");
      g.angle = a;
    }
    if (g.kind == GateKind::Increment) {
      fields >> tok;
      g.delta = static_cast<int>(parse_long(tok));
      fields >> tok;
      if (tok.rfind("mod", 0) != 0) throw CircuitError("expected mod<m>, got '" + tok + "'");
      g.modulus = static_cast<int>(parse_long(std::string_view(tok).substr(3)));
    }
    fields >> tok;
    if (tok.empty() || tok[0] != '@') throw CircuitError("expected @<target>, got '" + tok + "'");
    g.target = static_cast<Wire>(parse_long(std::string_view(tok).substr(1)));
    if (fields >> tok) {
      if (tok != "|") throw CircuitError("expected '|' before controls");
      fields >> tok;
      if (tok != "ctrl") throw CircuitError("expected 'ctrl'");
      while (fields >> tok) {
        if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') {
          throw CircuitError("bad control '" + tok + "'");
        }
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw CircuitError("bad control '" + tok + "'");
        Control ctl;
        ctl.wire = static_cast<Wire>(parse_long(std::string_view(tok).substr(1, comma - 1)));
        ctl.value = static_cast<int>(parse_long(std::string_view(tok).substr(comma + 1, tok.size() - comma - 2)));
        g.controls.push_back(ctl);
      }
    }
    c.append(std::move(g));
  }
  return c;
}

}  // namespace cliqueq
