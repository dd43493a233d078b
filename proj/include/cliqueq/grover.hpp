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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliqueq/circuit.hpp"
#include "cliqueq/decompose.hpp"
#include "cliqueq/graph.hpp"
#include "cliqueq/oracle.hpp"
#include "cliqueq/prep.hpp"
#include "cliqueq/sim.hpp"

namespace cliqueq {

/// Largest graph the simulated search accepts.
inline constexpr std::size_t kMaxSearchVertices = 20;
/// Reachable-subspace dimension above which the driver iterates directly.
inline constexpr std::size_t kReachableCap = 1024;

enum class DiffuserKind { Auto, Standard, PrepConjugated };
enum class Backend { Sparse, Dense };

std::string_view to_string(DiffuserKind d);
DiffuserKind parse_diffuser(std::string_view s);

struct GroverConfig {
  /// Unset: Dicke when k < n, full Hilbert when k == n.
  std::optional<PrepKind> prep;
  OracleVariant oracle = OracleVariant::Checking;
  Lowering lowering = Lowering::VChain;
  DiffuserKind diffuser = DiffuserKind::Auto;
  Backend backend = Backend::Sparse;
  std::size_t shots = 1024;
  std::uint64_t seed = 0;
  std::size_t max_boyer_rounds = 8;
  /// 0 selects optimal_iterations(N, M).
  std::size_t iterations = 0;
};

struct SearchResult {
  bool found = false;
  VertexSet witness;
  std::size_t clique_size = 0;
  std::size_t iterations_used = 0;
  std::size_t rounds = 0;
  double success_probability = 0.0;
  std::map<std::string, std::size_t> histogram;
  /// Clique sizes skipped by the classical edge-count filter (max_clique).
  std::vector<std::size_t> skipped_sizes;
  /// Clique sizes searched without success (max_clique).
  std::vector<std::size_t> failed_sizes;
};

/// H/X-conjugated multi-controlled Z: -I + (2/N) J up to global phase.
Circuit diffusion_standard(std::size_t n);

/// prep^-1, reflection about |0...0>, prep: 2|psi><psi| - I up to phase.
Circuit diffusion_prep_conjugated(const Circuit& prep);

/// max(1, floor(pi/4 * sqrt(N/M))).
std::size_t optimal_iterations(std::size_t search_space, std::size_t marked);

/// Resolves the defaults in `config` for a (graph, k) instance.
PrepSpec resolve_prep(const GroverConfig& config, std::size_t n, std::size_t k);
DiffuserKind resolve_diffuser(const GroverConfig& config, const PrepSpec& prep);

/// Abstract (unlowered) building blocks of a k-clique search.
struct GroverProgram {
  PrepSpec prep;
  OracleCircuit oracle;
  Circuit state_prep;  // vertex prep plus target in |->
  Circuit iterate;     // oracle followed by diffuser
  std::size_t num_wires() const { return oracle.layout.total_wires; }
};

GroverProgram build_grover_program(const Graph& g, std::size_t k, const GroverConfig& config);

/// prep followed by `iterations` copies of the iterate, still abstract.
Circuit assemble_grover_circuit(const GroverProgram& program, std::size_t iterations);

/// Runs with t = optimal_iterations(N, M) unless config.iterations is set.
SearchResult grover_known_m(const Graph& g, std::size_t k, const GroverConfig& config);

/// Rounds of 6^r iterations with one measurement each, verified classically.
SearchResult grover_unknown_m(const Graph& g, std::size_t k, const GroverConfig& config);

/// Searches k = n, n-1, ..., 2, skipping sizes with too few edges.
SearchResult max_clique(const Graph& g, const GroverConfig& config);

/**
 * Linear map of a lowered circuit restricted to the basis states reachable
 * from a seed state by repeated application. Lets the driver evaluate
 * step^t |seed> for large t by repeated squaring.
 */
class ReachableOperator {
 public:
  /// Gives up (valid() == false) when more than `cap` basis states are reachable.
  ReachableOperator(const Circuit& step, const SparseState& seed, std::size_t cap);

  bool valid() const { return valid_; }
  std::size_t dimension() const { return basis_.size(); }
  /// step^t applied to `v`, a coordinate vector over the reachable basis.
  std::vector<Amplitude> apply_power(std::vector<Amplitude> v, std::uint64_t t);
  std::vector<Amplitude> coordinates(const SparseState& s) const;
  SparseState to_state(const std::vector<Amplitude>& v) const;

 private:
  std::vector<int> dims_;
  std::vector<std::uint64_t> basis_;
  std::map<std::uint64_t, std::size_t> position_;
  std::vector<Matrix> powers_;  // step^(2^j)
  bool valid_ = false;
};

}  // namespace cliqueq
