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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliqueq/circuit.hpp"
#include "cliqueq/graph.hpp"

namespace cliqueq {

enum class OracleVariant { Checking, Increment };

std::string_view to_string(OracleVariant v);
OracleVariant parse_oracle_variant(std::string_view s);

struct OracleKind {
  OracleVariant variant = OracleVariant::Checking;
  /// Off when the state preparation already fixes the Hamming weight.
  bool count_nodes = true;
};

/**
 * Wire assignment of a clique oracle. Vertex wires come first (wire v holds
 * vertex v), followed by the edge counter (LSB first), edge flag, node
 * counter and node flag (when counting nodes), the edge-exists scratch wire
 * (increment variant), and the phase target last.
 */
struct OracleLayout {
  std::vector<Wire> vertex_wires;
  std::vector<Wire> edge_counter;
  Wire edge_flag = 0;
  std::vector<Wire> node_counter;
  std::optional<Wire> node_flag;
  std::optional<Wire> edge_exists;
  Wire target = 0;
  std::size_t total_wires = 0;

  static OracleLayout build(std::size_t n, std::size_t k, const OracleKind& kind);
  std::vector<WireRole> roles() const;
  /// Every wire other than the vertex register.
  std::vector<Wire> ancillas() const;
};

/// Bits needed to hold values 0..max_count.
std::size_t counter_width(std::size_t max_count);

/**
 * Ripple increment of `counter` (LSB first) conditioned on `controls`:
 * most-significant bit first, bit j flips under controls plus bits 0..j-1.
 */
Circuit controlled_increment(std::size_t num_wires, std::span<const Wire> counter,
                             const std::vector<Control>& controls);

/// Flips `flag` iff the counter equals `constant`.
Circuit equality_compare(std::size_t num_wires, std::span<const Wire> counter, std::size_t constant, Wire flag);

struct OracleCircuit {
  OracleLayout layout;
  OracleKind kind;
  Circuit circuit;  // abstract: contains Mct gates
  std::vector<std::string> warnings;
};

OracleCircuit checking_oracle(const Graph& g, std::size_t k, const OracleKind& kind);
OracleCircuit increment_oracle(const Graph& g, std::size_t k, const OracleKind& kind);
OracleCircuit build_oracle(const Graph& g, std::size_t k, const OracleKind& kind);

/// MCT count per number of controls.
struct ToffoliCensus {
  std::map<int, long> by_arity;
  long total() const;
  bool operator==(const ToffoliCensus&) const = default;
};

ToffoliCensus toffoli_census(const Circuit& c);

}  // namespace cliqueq
