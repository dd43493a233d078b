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

#include "cliqueq/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace cliqueq {

std::string_view to_string(DiffuserKind d) {
  switch (d) {
    case DiffuserKind::Auto: return "auto";
    case DiffuserKind::Standard: return "standard";
    case DiffuserKind::PrepConjugated: return "prep_conjugated";
  }
  return "auto";
}

DiffuserKind parse_diffuser(std::string_view s) {
  if (s == "auto") return DiffuserKind::Auto;
  if (s == "standard") return DiffuserKind::Standard;
  if (s == "prep_conjugated") return DiffuserKind::PrepConjugated;
  throw std::invalid_argument("unknown diffuser '" + std::string(s) + "'");
}

namespace {

// Reflection about |0...0> on wires 0..n-1, up to a global phase of -1.
void append_zero_reflection(Circuit& c, std::size_t n) {
  for (Wire w = 0; w < n; ++w) c.append(Gate::x(w));
  const Wire last = n - 1;
  c.append(Gate::h(last));
  if (n == 1) {
    c.append(Gate::x(last));
  } else {
    std::vector<Wire> ctl;
    for (Wire w = 0; w < last; ++w) ctl.push_back(w);
    c.append(Gate::mct(last, ctl));
  }
  c.append(Gate::h(last));
  for (Wire w = 0; w < n; ++w) c.append(Gate::x(w));
}

// Copies the gates of `small` onto the first wires of a wider circuit.
void embed(Circuit& wide, const Circuit& small) {
  if (small.num_wires() > wide.num_wires()) throw std::invalid_argument("cannot embed a wider circuit");
  for (const auto& g : small.gates()) wide.append(g);
}

}  // namespace

Circuit diffusion_standard(std::size_t n) {
  if (n < 1) throw std::invalid_argument("diffusion needs at least one wire");
  Circuit c(n);
  for (Wire w = 0; w < n; ++w) c.append(Gate::h(w));
  append_zero_reflection(c, n);
  for (Wire w = 0; w < n; ++w) c.append(Gate::h(w));
  return c;
}

Circuit diffusion_prep_conjugated(const Circuit& prep) {
  const std::size_t n = prep.num_wires();
  if (n < 1) throw std::invalid_argument("diffusion needs at least one wire");
  Circuit c(n);
  embed(c, inverse(prep));
  append_zero_reflection(c, n);
  embed(c, prep);
  return c;
}

std::size_t optimal_iterations(std::size_t search_space, std::size_t marked) {
  if (marked == 0) throw std::invalid_argument("no marked states; use the unknown-M search");
  if (marked > search_space) throw std::invalid_argument("more marked states than search space");
  const double t = std::numbers::pi / 4.0 *
                   std::sqrt(static_cast<double>(search_space) / static_cast<double>(marked));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(t)));
}

PrepSpec resolve_prep(const GroverConfig& config, std::size_t n, std::size_t k) {
  const PrepKind kind = config.prep.value_or(k < n ? PrepKind::Dicke : PrepKind::FullHilbert);
  switch (kind) {
    case PrepKind::FullHilbert: return PrepSpec::full_hilbert(n);
    case PrepKind::Dicke: return PrepSpec::dicke(n, k);
    case PrepKind::WState:
      if (k + 1 != n) throw std::invalid_argument("W-state prep only applies when k = n-1");
      return PrepSpec::w_state(n);
  }
  return PrepSpec::full_hilbert(n);
}

DiffuserKind resolve_diffuser(const GroverConfig& config, const PrepSpec& prep) {
  if (config.diffuser != DiffuserKind::Auto) return config.diffuser;
  return prep.kind == PrepKind::FullHilbert ? DiffuserKind::Standard : DiffuserKind::PrepConjugated;
}

GroverProgram build_grover_program(const Graph& g, std::size_t k, const GroverConfig& config) {
  const std::size_t n = g.num_vertices();
  const PrepSpec prep = resolve_prep(config, n, k);
  const OracleKind kind{config.oracle, !prep.fixes_weight()};
  OracleCircuit oracle = build_oracle(g, k, kind);
  const std::size_t total = oracle.layout.total_wires;
  const auto roles = oracle.layout.roles();

  Circuit state_prep(total);
  embed(state_prep, build_prep(prep, n));
  state_prep.append(Gate::x(oracle.layout.target));
  state_prep.append(Gate::h(oracle.layout.target));
  state_prep.set_roles(roles);

  const Circuit vertex_prep = build_prep(prep, n);
  const Circuit diffuser = resolve_diffuser(config, prep) == DiffuserKind::Standard
                               ? diffusion_standard(n)
                               : diffusion_prep_conjugated(vertex_prep);
  Circuit iterate(total);
  iterate.extend(oracle.circuit);
  embed(iterate, diffuser);
  iterate.set_roles(roles);

  return GroverProgram{prep, std::move(oracle), std::move(state_prep), std::move(iterate)};
}

Circuit assemble_grover_circuit(const GroverProgram& program, std::size_t iterations) {
  Circuit c = program.state_prep;
  for (std::size_t i = 0; i < iterations; ++i) c.extend(program.iterate);
  return c;
}

namespace {

struct LoweredProgram {
  Circuit prep;
  Circuit iterate;
};

// Lowers prep and iterate together so both share one wire table.
LoweredProgram lower_program(const GroverProgram& program, Lowering method) {
  const Circuit lowered = lower(assemble_grover_circuit(program, 1), method);
  LoweredProgram out{Circuit(lowered.wires()), Circuit(lowered.wires())};
  const std::size_t split = program.state_prep.size();
  for (std::size_t i = 0; i < lowered.size(); ++i) (i < split ? out.prep : out.iterate).append(lowered.gates()[i]);
  return out;
}

std::set<std::string> marked_strings(const Graph& g, std::size_t k) {
  std::set<std::string> out;
  for (const auto& c : enumerate_k_cliques(g, k)) out.insert(c.to_bitstring(g.num_vertices()));
  return out;
}

double marked_probability(const std::map<std::string, double>& probs, const std::set<std::string>& marked) {
  double p = 0;
  for (const auto& s : marked)
    if (auto it = probs.find(s); it != probs.end()) p += it->second;
  return p;
}

std::string draw_one(const std::map<std::string, double>& probs, std::mt19937_64& rng) {
  double total = 0;
  for (const auto& [k, p] : probs) total += p;
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  double acc = 0;
  std::string last;
  for (const auto& [k, p] : probs) {
    acc += p;
    last = k;
    if (u < acc) return k;
  }
  return last;
}

void check_size(const Graph& g) {
  if (g.num_vertices() > kMaxSearchVertices) {
    throw InstanceTooLarge("search limited to " + std::to_string(kMaxSearchVertices) + " vertices");
  }
}

bool verifies(const Graph& g, std::size_t k, const std::string& bits) {
  const auto s = VertexSet::from_bitstring(bits);
  return s.size() == k && is_clique(g, s);
}

}  // namespace

SearchResult grover_known_m(const Graph& g, std::size_t k, const GroverConfig& config) {
  check_size(g);
  const auto marked = marked_strings(g, k);
  if (marked.empty()) throw std::invalid_argument("graph has no " + std::to_string(k) + "-clique");
  const GroverProgram program = build_grover_program(g, k, config);
  const std::size_t t = config.iterations != 0
                            ? config.iterations
                            : optimal_iterations(program.prep.search_space_size(), marked.size());
  const LoweredProgram lowered = lower_program(program, config.lowering);
  const auto& vertices = program.oracle.layout.vertex_wires;

  std::map<std::string, double> probs;
  if (config.backend == Backend::Dense) {
    StateVector psi = run(lowered.prep, 0);
    for (std::size_t i = 0; i < t; ++i) psi = run(lowered.iterate, psi);
    probs = probabilities(psi, vertices);
  } else {
    SparseState psi = run_sparse(lowered.prep, SparseState(lowered.prep.wires().dims, 0));
    for (std::size_t i = 0; i < t; ++i) psi = run_sparse(lowered.iterate, std::move(psi));
    probs = probabilities(psi, vertices);
  }

  SearchResult r;
  r.iterations_used = t;
  r.rounds = 1;
  r.clique_size = k;
  r.success_probability = marked_probability(probs, marked);
  r.histogram = sample(probs, config.shots, config.seed);
  std::size_t best = 0;
  for (const auto& [bits, count] : r.histogram) {
    if (count > best && marked.count(bits) != 0) {
      best = count;
      r.witness = VertexSet::from_bitstring(bits);
      r.found = true;
    }
  }
  return r;
}

SearchResult grover_unknown_m(const Graph& g, std::size_t k, const GroverConfig& config) {
  check_size(g);
  if (config.max_boyer_rounds > 24) throw std::invalid_argument("max_boyer_rounds above 24 overflows 6^r");
  const GroverProgram program = build_grover_program(g, k, config);
  const LoweredProgram lowered = lower_program(program, config.lowering);
  const auto& vertices = program.oracle.layout.vertex_wires;
  const auto marked = marked_strings(g, k);

  const SparseState seed = run_sparse(lowered.prep, SparseState(lowered.prep.wires().dims, 0));
  ReachableOperator op(lowered.iterate, seed, kReachableCap);
  std::vector<Amplitude> start;
  if (op.valid()) start = op.coordinates(seed);

  // Each round is a fresh run of t iterations from the prepared state.
  std::mt19937_64 rng(config.seed);
  SearchResult r;
  r.clique_size = k;
  std::uint64_t t = 1;
  for (std::size_t round = 0; round < config.max_boyer_rounds; ++round, t *= 6) {
    std::map<std::string, double> probs;
    if (op.valid()) {
      probs = probabilities(op.to_state(op.apply_power(start, t)), vertices);
    } else {
      SparseState psi = seed;
      for (std::uint64_t i = 0; i < t; ++i) psi = run_sparse(lowered.iterate, std::move(psi));
      probs = probabilities(psi, vertices);
    }
    r.iterations_used += t;
    r.rounds = round + 1;
    r.success_probability = marked_probability(probs, marked);

    const std::string outcome = draw_one(probs, rng);
    ++r.histogram[outcome];
    if (verifies(g, k, outcome)) {
      r.found = true;
      r.witness = VertexSet::from_bitstring(outcome);
      break;
    }
  }
  return r;
}

SearchResult max_clique(const Graph& g, const GroverConfig& config) {
  const std::size_t n = g.num_vertices();
  SearchResult best;
  best.witness = VertexSet{0};
  best.clique_size = n >= 1 ? 1 : 0;
  if (n < 2) return best;

  for (std::size_t k = n; k >= 2; --k) {
    if (binomial(k, 2) > g.num_edges()) {
      best.skipped_sizes.push_back(k);
      continue;
    }
    GroverConfig cfg = config;
    if (cfg.prep == PrepKind::WState && k + 1 != n) cfg.prep.reset();
    SearchResult r = grover_unknown_m(g, k, cfg);
    best.iterations_used += r.iterations_used;
    best.rounds += r.rounds;
    for (const auto& [bits, count] : r.histogram) best.histogram[bits] += count;
    if (r.found) {
      best.found = true;
      best.witness = r.witness;
      best.clique_size = k;
      best.success_probability = r.success_probability;
      return best;
    }
    best.failed_sizes.push_back(k);
  }
  return best;
}

ReachableOperator::ReachableOperator(const Circuit& step, const SparseState& seed, std::size_t cap)
    : dims_(step.wires().dims) {
  if (seed.dims() != dims_) throw SimulationError("seed state does not match circuit wires");
  std::vector<std::uint64_t> start;
  for (const auto& [i, a] : seed.amplitudes()) start.push_back(i);
  std::sort(start.begin(), start.end());
  for (auto i : start) {
    position_.emplace(i, basis_.size());
    basis_.push_back(i);
  }
  if (basis_.size() > cap) return;

  // Amplitudes below this are rounding residue of exact cancellations.
  constexpr double kDrop = 1e-13;
  std::vector<std::vector<std::pair<std::size_t, Amplitude>>> columns;
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    const SparseState out = run_sparse(step, SparseState(dims_, basis_[col]));
    std::vector<std::pair<std::uint64_t, Amplitude>> entries(out.amplitudes().begin(), out.amplitudes().end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Amplitude>> column;
    for (const auto& [idx, a] : entries) {
      if (std::abs(a) < kDrop) continue;
      auto [it, inserted] = position_.emplace(idx, basis_.size());
      if (inserted) {
        basis_.push_back(idx);
        if (basis_.size() > cap) return;
      }
      column.emplace_back(it->second, a);
    }
    columns.push_back(std::move(column));
  }

  Matrix m(basis_.size(), basis_.size());
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [row, a] : columns[col]) m(row, col) = a;
  powers_.push_back(std::move(m));
  valid_ = true;
}

std::vector<Amplitude> ReachableOperator::apply_power(std::vector<Amplitude> v, std::uint64_t t) {
  if (!valid_) throw SimulationError("reachable operator exceeded its cap");
  std::size_t j = 0;
  while (t != 0) {
    if (t & 1U) v = powers_[j] * v;
    t >>= 1U;
    if (t != 0 && powers_.size() == j + 1) powers_.push_back(powers_[j] * powers_[j]);
    ++j;
  }
  return v;
}

std::vector<Amplitude> ReachableOperator::coordinates(const SparseState& s) const {
  std::vector<Amplitude> v(basis_.size());
  for (const auto& [idx, a] : s.amplitudes()) {
    auto it = position_.find(idx);
    if (it == position_.end()) {
      if (std::abs(a) > tol::kAncilla) throw SimulationError("state leaves the reachable subspace");
      continue;
    }
    v[it->second] = a;
  }
  return v;
}

SparseState ReachableOperator::to_state(const std::vector<Amplitude>& v) const {
  if (v.size() != basis_.size()) throw SimulationError("coordinate vector has wrong length");
  SparseState s(dims_, basis_.front());
  s.set(basis_.front(), Amplitude{});
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != Amplitude{}) s.set(basis_[i], v[i]);
  return s;
}

}  // namespace cliqueq
