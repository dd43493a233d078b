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

#include "cliqueq/prep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliqueq/graph.hpp"

namespace cliqueq {

std::string_view to_string(PrepKind k) {
  switch (k) {
    case PrepKind::FullHilbert: return "hilbert";
    case PrepKind::WState: return "w";
    case PrepKind::Dicke: return "dicke";
  }
  return "hilbert";
}

PrepKind parse_prep_kind(std::string_view s) {
  if (s == "hilbert") return PrepKind::FullHilbert;
  if (s == "w") return PrepKind::WState;
  if (s == "dicke") return PrepKind::Dicke;
  throw std::invalid_argument("unknown prep kind '" + std::string(s) + "'");
}

PrepSpec PrepSpec::full_hilbert(std::size_t n) {
  if (n < 1) throw std::invalid_argument("prep needs at least one wire");
  return {PrepKind::FullHilbert, n, 0};
}

PrepSpec PrepSpec::w_state(std::size_t n) {
  if (n < 2) throw std::invalid_argument("W-state search needs at least two wires");
  return {PrepKind::WState, n, n - 1};
}

PrepSpec PrepSpec::dicke(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("Dicke weight k must satisfy 1 <= k <= n");
  return {PrepKind::Dicke, n, k};
}

std::size_t PrepSpec::search_space_size() const {
  switch (kind) {
    case PrepKind::FullHilbert: return std::size_t{1} << n;
    case PrepKind::WState: return n;
    case PrepKind::Dicke: return binomial(n, k);
  }
  return 0;
}

Circuit hadamard_prep(std::size_t n) {
  if (n < 1) throw std::invalid_argument("prep needs at least one wire");
  Circuit c(n);
  for (Wire w = 0; w < n; ++w) c.append(Gate::h(w));
  return c;
}

Circuit w_state_prep(std::size_t n) {
  if (n < 1) throw std::invalid_argument("prep needs at least one wire");
  Circuit c(n);
  c.append(Gate::x(0));
  for (Wire i = 0; i + 1 < n; ++i) {
    const double theta = 2.0 * std::acos(std::sqrt(1.0 / static_cast<double>(n - i)));
    c.append(Gate::ry(i + 1, theta, {{i, 1}}));
    c.append(Gate::x(i, {{i + 1, 1}}));
  }
  return c;
}

namespace {

// Ry on `t` conditioned on both `c1` and `c2` holding 1.
void append_ccry(Circuit& c, Wire c1, Wire c2, Wire t, double theta) {
  c.append(Gate::ry(t, theta / 2, {{c1, 1}}));
  c.append(Gate::x(c2, {{c1, 1}}));
  c.append(Gate::ry(t, -theta / 2, {{c2, 1}}));
  c.append(Gate::x(c2, {{c1, 1}}));
  c.append(Gate::ry(t, theta / 2, {{c2, 1}}));
}

// Split & cyclic shift on the block of wires ending at `last`: moves
// amplitude from the block's |..01> patterns so that the l-qubit prefix
// holds the right weight distribution.
void append_scs(Circuit& c, Wire last, std::size_t l, std::size_t k) {
  const Wire a = last - 1;
  const Wire b = last;
  const auto ld = static_cast<double>(l);
  c.append(Gate::x(b, {{a, 1}}));
  c.append(Gate::ry(a, 2.0 * std::acos(std::sqrt(1.0 / ld)), {{b, 1}}));
  c.append(Gate::x(b, {{a, 1}}));
  for (std::size_t m = 2; m <= k; ++m) {
    const Wire t = last - m;
    c.append(Gate::x(b, {{t, 1}}));
    append_ccry(c, b, t + 1, t, 2.0 * std::acos(std::sqrt(static_cast<double>(m) / ld)));
    c.append(Gate::x(b, {{t, 1}}));
  }
}

}  // namespace

Circuit dicke_prep(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("Dicke weight k must satisfy 1 <= k <= n");
  Circuit c(n);
  for (Wire w = n - k; w < n; ++w) c.append(Gate::x(w));
  for (std::size_t l = n; l > k; --l) append_scs(c, l - 1, l, k);
  for (std::size_t l = k; l >= 2; --l) append_scs(c, l - 1, l, l - 1);
  return c;
}

Circuit build_prep(const PrepSpec& spec, std::size_t total_wires) {
  if (spec.n > total_wires) throw std::invalid_argument("prep wider than circuit");
  Circuit prep;
  switch (spec.kind) {
    case PrepKind::FullHilbert: prep = hadamard_prep(spec.n); break;
    case PrepKind::Dicke: prep = dicke_prep(spec.n, spec.k); break;
    case PrepKind::WState:
      prep = w_state_prep(spec.n);
      for (Wire w = 0; w < spec.n; ++w) prep.append(Gate::x(w));
      break;
  }
  Circuit out(total_wires);
  for (const auto& g : prep.gates()) out.append(g);
  return out;
}

}  // namespace cliqueq
