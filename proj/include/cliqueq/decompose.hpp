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
#include <string_view>

#include "cliqueq/circuit.hpp"

namespace cliqueq {

enum class Lowering { VChain, Tree };

std::string_view to_string(Lowering l);
Lowering parse_lowering(std::string_view s);

// Each lowering takes an abstract MCT gate and the wire table of the circuit
// it lives in, and returns a fragment over the same wires with raised
// dimensions where intermediate levels are used.

/**
 * Sequential chain: c2 is raised to |2> when c1 and c2 are both 1, then each
 * further control is raised when its predecessor holds 2; the target flips on
 * the last raised control, and the chain is uncomputed. Size and depth are
 * both 2n-1 for n controls; n = 1 gives a bare CNOT.
 */
Circuit lower_vchain(const Gate& mct, const WireTable& wires);

/**
 * Two-control generalized Toffoli over d-level wires (d in {2,3}): the second
 * control is raised to |d> via a mod-(d+1) increment, the target gets a mod-d
 * increment conditioned on |d>, then the raise is undone. `mct` must have
 * exactly two controls; trigger values are taken as d-1.
 */
Circuit lower_dary(const Gate& mct, const WireTable& wires, int d);

/**
 * Log-depth lowering with ququarts. Each internal wire absorbs the completion
 * marks of up to two child subtrees (1 -> 2 -> 3), so the compute phase of a
 * tree finishing at step t holds F(t) = 1 + F(t-1) + F(t-2) controls, with
 * F(0) = 1 and F(1) = 2. Total depth is 2 t(n) + 1 where t(n) is the smallest
 * t with F(t) >= n.
 */
Circuit lower_tree(const Gate& mct, const WireTable& wires);

/// Compute-phase steps used by lower_tree for n controls.
std::size_t tree_steps(std::size_t n_controls);

/// Replaces every abstract MCT in `c` using the chosen pass.
Circuit lower(const Circuit& c, Lowering method);

/// Row of the qubit-only reference cost model.
struct StandardCostEntry {
  int n_controls = 0;
  long size = 0;
  long depth = 0;
  long one_qubit = 0;
  long two_qubit = 0;
  bool extrapolated = false;

  bool operator==(const StandardCostEntry&) const = default;
};

/// Per-arity costs; the default table holds the published 1..4-control rows.
class StandardCostModel {
 public:
  StandardCostModel();
  explicit StandardCostModel(std::map<int, StandardCostEntry> entries);

  /// Looks up `n`, extrapolating linearly from the two largest built-in rows
  /// when absent. Throws for n <= 0.
  StandardCostEntry cost(int n_controls) const;
  const std::map<int, StandardCostEntry>& entries() const { return entries_; }

 private:
  std::map<int, StandardCostEntry> entries_;
};

StandardCostEntry standard_cost(int n_controls, const StandardCostModel& model = StandardCostModel());

}  // namespace cliqueq
