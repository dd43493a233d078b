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

#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliqueq {

using Wire = std::size_t;

/// Wires never exceed four levels (ququart).
inline constexpr int kMaxWireDim = 4;

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class WireRole { Vertex, EdgeCounter, EdgeFlag, NodeCounter, NodeFlag, EdgeExists, Target, Other };

std::string_view to_string(WireRole role);

struct WireTable {
  std::vector<int> dims;
  std::vector<WireRole> roles;

  WireTable() = default;
  /// `count` binary wires tagged Other.
  explicit WireTable(std::size_t count);
  explicit WireTable(std::vector<int> dims);

  std::size_t size() const { return dims.size(); }
  int dim(Wire w) const { return dims.at(w); }
  void validate() const;

  bool operator==(const WireTable&) const = default;
};

/// A (wire, value) pair: the gate fires only if the wire holds `value`.
struct Control {
  Wire wire = 0;
  int value = 1;

  auto operator<=>(const Control&) const = default;
};

enum class GateKind {
  H,
  X,
  Z,
  S,
  Sdg,
  Ry,
  Increment,
  Mct,
};

bool is_single_unitary(GateKind kind);

/**
 * One circuit element. Single-wire unitaries (H, X, Z, S, Sdg, Ry) act on the
 * two lowest levels of the target and as identity on higher levels. An
 * Increment adds `delta` modulo `modulus` to the target level when it is below
 * `modulus`. Mct is the abstract multi-controlled Toffoli that lowering passes
 * replace; its controls trigger on value 1 of binary wires.
 */
struct Gate {
  GateKind kind = GateKind::X;
  Wire target = 0;
  std::vector<Control> controls;
  double angle = 0.0;  // Ry only
  int delta = 0;       // Increment only
  int modulus = 0;     // Increment only

  static Gate h(Wire t, std::vector<Control> c = {});
  static Gate x(Wire t, std::vector<Control> c = {});
  static Gate z(Wire t, std::vector<Control> c = {});
  static Gate s(Wire t, std::vector<Control> c = {});
  static Gate sdg(Wire t, std::vector<Control> c = {});
  static Gate ry(Wire t, double theta, std::vector<Control> c = {});
  static Gate increment(Wire t, int delta, int modulus, std::vector<Control> c = {});
  /// Abstract MCT with all controls triggering on 1.
  static Gate mct(Wire t, const std::vector<Wire>& controls);

  std::vector<Wire> wires() const;
  bool touches(Wire w) const;
  Gate inverse() const;
  /// True when `other` undoes this gate on the same wires and triggers.
  bool is_inverse_of(const Gate& other) const;
  /// Largest level this gate reads or writes on `w`, or -1 if untouched.
  int max_level_on(Wire w) const;

  bool operator==(const Gate&) const = default;
};

/**
 * Ordered gate list over a table of wires. Gates are validated on append
 * against the current wire dimensions.
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(WireTable wires);
  explicit Circuit(std::size_t binary_wires) : Circuit(WireTable(binary_wires)) {}

  const WireTable& wires() const { return wires_; }
  std::size_t num_wires() const { return wires_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }

  Circuit& append(Gate g);
  /// Appends every gate of `other`, which must have the same wire count.
  Circuit& extend(const Circuit& other);
  /// Widens wire dimensions; never narrows.
  void raise_dims(const std::vector<int>& dims);
  void set_roles(std::vector<WireRole> roles);

  std::size_t size() const { return gates_.size(); }
  std::size_t depth() const;
  bool has_abstract_gates() const;
  int max_dim() const;

  bool operator==(const Circuit&) const = default;

 private:
  void check_gate(const Gate& g) const;

  WireTable wires_;
  std::vector<Gate> gates_;
};

/// Gates reversed and individually inverted. Throws on abstract gates.
Circuit inverse(const Circuit& c);

/// Removes adjacent mutually-inverse gate pairs until none remain.
Circuit cancel_adjacent_inverses(const Circuit& c);

/// Line-oriented text form, one gate per line after a `wires` header.
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);
std::string format_gate(const Gate& g);

}  // namespace cliqueq
