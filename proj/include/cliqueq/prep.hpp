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

#include <cstddef>
#include <string_view>

#include "cliqueq/circuit.hpp"

namespace cliqueq {

enum class PrepKind { FullHilbert, WState, Dicke };

std::string_view to_string(PrepKind k);
PrepKind parse_prep_kind(std::string_view s);

/// Initial-state family for a search over `n` vertex wires.
struct PrepSpec {
  PrepKind kind = PrepKind::FullHilbert;
  std::size_t n = 0;
  std::size_t k = 0;  // Hamming weight selected by the prep (Dicke: k, W search: n-1)

  static PrepSpec full_hilbert(std::size_t n);
  /// Search over weight-(n-1) strings seeded from a W state.
  static PrepSpec w_state(std::size_t n);
  static PrepSpec dicke(std::size_t n, std::size_t k);

  /// Number of basis states in the prepared superposition.
  std::size_t search_space_size() const;
  /// Hamming weight of every supported string, if fixed.
  bool fixes_weight() const { return kind != PrepKind::FullHilbert; }
};

/// n parallel Hadamards.
Circuit hadamard_prep(std::size_t n);

/// X on wire 0, then a controlled-Ry / CNOT cascade that hands amplitude
/// 1/sqrt(n) to each weight-1 string.
Circuit w_state_prep(std::size_t n);

/// Split-and-cyclic-shift construction of |D^n_k>. Doubly controlled
/// rotations are expanded into singly controlled Ry and CNOT gates, so every
/// gate acts on at most two wires.
Circuit dicke_prep(std::size_t n, std::size_t k);

/// Circuit preparing the superposition described by `spec` on wires 0..n-1
/// of a circuit with `total_wires` wires. For W-state search the W state is
/// complemented so that set bits mark the n-1 selected vertices.
Circuit build_prep(const PrepSpec& spec, std::size_t total_wires);

}  // namespace cliqueq
