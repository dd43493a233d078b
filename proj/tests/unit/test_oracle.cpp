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


#include <gtest/gtest.h>

#include <bit>

#include "cliqueq/decompose.hpp"
#include "cliqueq/oracle.hpp"
#include "cliqueq/sim.hpp"
#include "reference.hpp"

using namespace cliqueq;

namespace {

// Basis index of the lowered circuit with the vertex register set to `mask`
// (bit v = vertex v) and every other wire at `rest`.
std::uint64_t vertex_basis(const RadixIndex& idx, std::size_t n, std::uint32_t mask, std::size_t total,
                           Wire target, int target_value) {
  std::vector<int> digits(total, 0);
  for (std::size_t v = 0; v < n; ++v) digits[v] = (mask >> v) & 1U;
  digits[target] = target_value;
  return idx.encode(digits);
}

// Vertex masks whose target flips, checking along the way that every
// ancilla returns to |0> exactly.
std::set<std::string> flipped_set(const Graph& g, const OracleCircuit& oc, Lowering lowering,
                                  std::optional<std::size_t> weight) {
  const Circuit c = lower(oc.circuit, lowering);
  const RadixIndex idx(c.wires().dims);
  const std::size_t n = g.num_vertices();
  std::set<std::string> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (weight && static_cast<std::size_t>(std::popcount(m)) != *weight) continue;
    const SparseState s = run_sparse(c, SparseState(c.wires().dims, vertex_basis(idx, n, m, c.num_wires(),
                                                                                    oc.layout.target, 0)));
    const std::uint64_t flipped = vertex_basis(idx, n, m, c.num_wires(), oc.layout.target, 1);
    const std::uint64_t same = vertex_basis(idx, n, m, c.num_wires(), oc.layout.target, 0);
    const double pf = std::norm(s.get(flipped));
    const double ps = std::norm(s.get(same));
    EXPECT_NEAR(pf + ps, 1.0, 1e-12) << "ancillas not restored";
    EXPECT_TRUE(pf < 1e-12 || ps < 1e-12);
    if (pf > 0.5) out.insert(testref::mask_to_bits(m, n));
  }
  return out;
}

}  // namespace

TEST(CounterWidth, Values) {
  EXPECT_EQ(counter_width(6), 3U);
  EXPECT_EQ(counter_width(1), 1U);
  EXPECT_EQ(counter_width(10), 4U);
  EXPECT_EQ(counter_width(7), 3U);
  EXPECT_EQ(counter_width(8), 4U);
  EXPECT_THROW(counter_width(0), std::invalid_argument);
}

TEST(ControlledIncrement, CascadeShape) {
  const std::vector<Wire> counter{2, 3, 4};
  const Circuit c = controlled_increment(5, counter, {{0, 1}, {1, 1}});
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c.gates()[0], Gate::mct(4, {0, 1, 2, 3}));
  EXPECT_EQ(c.gates()[1], Gate::mct(3, {0, 1, 2}));
  EXPECT_EQ(c.gates()[2], Gate::mct(2, {0, 1}));

  const Circuit single = controlled_increment(1, std::vector<Wire>{0}, {});
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single.gates()[0], Gate::x(0));
  EXPECT_THROW(controlled_increment(3, std::vector<Wire>{1, 2}, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(controlled_increment(3, std::vector<Wire>{}, {{0, 1}}), std::invalid_argument);
}

TEST(ControlledIncrement, AddsOneModEight) {
  const std::vector<Wire> counter{2, 3, 4};  // LSB first
  const Circuit c = lower(controlled_increment(5, counter, {{0, 1}, {1, 1}}), Lowering::VChain);
  const RadixIndex idx(c.wires().dims);
  for (int ctl = 0; ctl < 4; ++ctl) {
    for (int value = 0; value < 8; ++value) {
      const std::vector<int> in{ctl >> 1, ctl & 1, value & 1, (value >> 1) & 1, (value >> 2) & 1};
      const int expect = ctl == 3 ? (value + 1) % 8 : value;
      const std::vector<int> want{ctl >> 1, ctl & 1, expect & 1, (expect >> 1) & 1, (expect >> 2) & 1};
      EXPECT_NEAR(std::abs(run(c, idx.encode(in))[idx.encode(want)]), 1.0, 1e-12);
    }
  }
}

TEST(EqualityCompare, ShapesAndTruthTable) {
  const std::vector<Wire> counter{0, 1, 2};
  const Circuit six = equality_compare(4, counter, 6, 3);
  EXPECT_EQ(six.gates(), (std::vector<Gate>{Gate::x(0), Gate::mct(3, {0, 1, 2}), Gate::x(0)}));
  EXPECT_EQ(equality_compare(4, counter, 7, 3).size(), 1U);
  const Circuit four = equality_compare(4, counter, 4, 3);
  EXPECT_EQ(four.gates(),
            (std::vector<Gate>{Gate::x(0), Gate::x(1), Gate::mct(3, {0, 1, 2}), Gate::x(0), Gate::x(1)}));
  EXPECT_THROW(equality_compare(4, counter, 8, 3), std::invalid_argument);

  const Circuit l = lower(six, Lowering::VChain);
  const RadixIndex idx(l.wires().dims);
  for (int v = 0; v < 8; ++v) {
    const std::vector<int> in{v & 1, (v >> 1) & 1, (v >> 2) & 1, 0};
    std::vector<int> want = in;
    want[3] = v == 6 ? 1 : 0;
    EXPECT_NEAR(std::abs(run(l, idx.encode(in))[idx.encode(want)]), 1.0, 1e-12);
  }
}

TEST(OracleLayout, WiresAreDistinctAndSized) {
  const OracleLayout hil = OracleLayout::build(6, 4, {OracleVariant::Increment, true});
  EXPECT_EQ(hil.edge_counter.size(), 3U);
  EXPECT_EQ(hil.node_counter.size(), 3U);
  EXPECT_TRUE(hil.node_flag && hil.edge_exists);
  std::set<Wire> all(hil.vertex_wires.begin(), hil.vertex_wires.end());
  all.insert(hil.edge_counter.begin(), hil.edge_counter.end());
  all.insert(hil.node_counter.begin(), hil.node_counter.end());
  all.insert({hil.edge_flag, *hil.node_flag, *hil.edge_exists, hil.target});
  EXPECT_EQ(all.size(), hil.total_wires);
  EXPECT_EQ(hil.total_wires, 6U + 3U + 1U + 3U + 1U + 1U + 1U);
  EXPECT_EQ(hil.roles().back(), WireRole::Target);
  EXPECT_EQ(hil.ancillas().size(), hil.total_wires - 6);

  const OracleLayout dk = OracleLayout::build(6, 4, {OracleVariant::Checking, false});
  EXPECT_TRUE(dk.node_counter.empty());
  EXPECT_FALSE(dk.node_flag || dk.edge_exists);
  EXPECT_EQ(dk.total_wires, 6U + 3U + 1U + 1U);
  EXPECT_THROW(OracleLayout::build(3, 4, {}), std::invalid_argument);
  EXPECT_THROW(OracleLayout::build(3, 1, {}), std::invalid_argument);
}

TEST(CheckingOracle, Examples) {
  const Graph six = testref::six_vertex_graph();
  const OracleCircuit dk = checking_oracle(six, 4, {OracleVariant::Checking, false});
  EXPECT_EQ(flipped_set(six, dk, Lowering::VChain, 4), (std::set<std::string>{"011110"}));

  const Graph k3 = Graph::complete(3);
  const OracleCircuit hil = checking_oracle(k3, 3, {OracleVariant::Checking, true});
  EXPECT_EQ(flipped_set(k3, hil, Lowering::VChain, std::nullopt), (std::set<std::string>{"111"}));

  const OracleCircuit none = checking_oracle(six, 6, {OracleVariant::Checking, true});
  EXPECT_FALSE(none.warnings.empty());
  EXPECT_TRUE(flipped_set(six, none, Lowering::VChain, std::nullopt).empty());
}

TEST(IncrementOracle, Examples) {
  const Graph tri = testref::one_triangle_graph();
  const OracleCircuit oc = increment_oracle(tri, 3, {OracleVariant::Increment, true});
  EXPECT_EQ(flipped_set(tri, oc, Lowering::VChain, std::nullopt), (std::set<std::string>{"1110"}));

  const Graph empty = Graph::edgeless(4);
  for (std::size_t k = 2; k <= 4; ++k) {
    const OracleCircuit e = increment_oracle(empty, k, {OracleVariant::Increment, true});
    EXPECT_TRUE(flipped_set(empty, e, Lowering::VChain, std::nullopt).empty());
  }
  const Graph six = testref::six_vertex_graph();
  EXPECT_EQ(flipped_set(six, increment_oracle(six, 4, {OracleVariant::Increment, true}), Lowering::Tree, std::nullopt),
            flipped_set(six, checking_oracle(six, 4, {OracleVariant::Checking, true}), Lowering::VChain, std::nullopt));
}

TEST(Oracle, PhaseKickbackSign) {
  const Graph tri = testref::one_triangle_graph();
  const OracleCircuit oc = checking_oracle(tri, 3, {OracleVariant::Checking, true});
  Circuit c(oc.layout.total_wires);
  for (Wire v = 0; v < 4; ++v) c.append(Gate::h(v));
  c.append(Gate::x(oc.layout.target));
  c.append(Gate::h(oc.layout.target));
  c.extend(oc.circuit);
  const Circuit l = lower(c, Lowering::VChain);
  const SparseState s = run_sparse(l, SparseState(l.wires().dims, 0));
  const RadixIndex idx(l.wires().dims);
  for (std::uint32_t m = 0; m < 16; ++m) {
    const std::uint64_t i = vertex_basis(idx, 4, m, l.num_wires(), oc.layout.target, 0);
    const double sign = testref::mask_to_bits(m, 4) == "1110" ? -1.0 : 1.0;
    EXPECT_NEAR(s.get(i).real(), sign * 0.25 * std::sqrt(0.5), 1e-12) << m;
  }
}

// Every graph in a seeded corpus: both oracle variants mark exactly the
// k-cliques, over the full cube (node counting) and over weight-k inputs.
TEST(Oracle, MarksExactlyTheKCliquesOnCorpus) {
  const auto corpus = testref::random_graphs(25, 2, 6, 777);
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 2; k <= g.num_vertices(); ++k) {
      const auto expected = testref::k_clique_strings(g, k);
      for (OracleVariant v : {OracleVariant::Checking, OracleVariant::Increment}) {
        EXPECT_EQ(flipped_set(g, build_oracle(g, k, {v, true}), Lowering::VChain, std::nullopt), expected)
            << "graph " << gi << " k=" << k;
        EXPECT_EQ(flipped_set(g, build_oracle(g, k, {v, false}), Lowering::VChain, k), expected)
            << "graph " << gi << " k=" << k;
      }
    }
  }
}

TEST(Oracle, CancellationKeepsUnitary) {
  const Graph path(3, {{0, 1}, {1, 2}});
  for (OracleVariant v : {OracleVariant::Checking, OracleVariant::Increment}) {
    const Circuit l = lower(build_oracle(path, 2, {v, false}).circuit, Lowering::VChain);
    const Circuit reduced = cancel_adjacent_inverses(l);
    EXPECT_LE(reduced.size(), l.size());
    EXPECT_LT(max_abs_diff(unitary_of(l), unitary_of(reduced)), 1e-9);
  }
}

TEST(Oracle, UncomputeMirrorsCompute) {
  const OracleCircuit oc = checking_oracle(testref::six_vertex_graph(), 4, {OracleVariant::Checking, true});
  const auto& gates = oc.circuit.gates();
  ASSERT_EQ(gates.size() % 2, 1U);
  const std::size_t mid = gates.size() / 2;
  EXPECT_EQ(gates[mid], Gate::mct(oc.layout.target, {oc.layout.edge_flag, *oc.layout.node_flag}));
  for (std::size_t i = 0; i < mid; ++i) EXPECT_EQ(gates[i], gates[gates.size() - 1 - i].inverse());
}

TEST(ToffoliCensus, Counts) {
  Circuit single(3);
  single.append(Gate::mct(2, {0, 1}));
  EXPECT_EQ(toffoli_census(single).by_arity, (std::map<int, long>{{2, 1}}));
  EXPECT_EQ(toffoli_census(single).total(), 1);

  // One-triangle graph, k=3: a 2-bit edge counter, so each of the 4 edges
  // costs one 3-control and one 2-control MCT; the compare adds a 2-control
  // MCT; compute and uncompute double that, and the flip adds one.
  const Graph tri = testref::one_triangle_graph();
  const auto hil = toffoli_census(checking_oracle(tri, 3, {OracleVariant::Checking, true}).circuit);
  const auto dk = toffoli_census(checking_oracle(tri, 3, {OracleVariant::Checking, false}).circuit);
  const auto inc_hil = toffoli_census(increment_oracle(tri, 3, {OracleVariant::Increment, true}).circuit);
  const auto inc_fix = toffoli_census(increment_oracle(tri, 3, {OracleVariant::Increment, false}).circuit);
  EXPECT_EQ(dk.by_arity, (std::map<int, long>{{1, 1}, {2, 10}, {3, 8}}));
  EXPECT_EQ(dk.total(), 19);
  EXPECT_EQ(hil.total(), 45);
  EXPECT_EQ(inc_hil.total(), 61);
  EXPECT_EQ(inc_fix.total(), 35);
  EXPECT_EQ(toffoli_census(checking_oracle(tri, 3, {OracleVariant::Checking, true}).circuit), hil);
}

TEST(OracleVariant, Names) {
  EXPECT_EQ(parse_oracle_variant("checking"), OracleVariant::Checking);
  EXPECT_EQ(parse_oracle_variant("increment"), OracleVariant::Increment);
  EXPECT_THROW(parse_oracle_variant("phase"), std::invalid_argument);
}
