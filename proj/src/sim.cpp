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

#include "cliqueq/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

namespace cliqueq {

namespace {

using Mat2 = std::array<std::array<Amplitude, 2>, 2>;

Mat2 single_matrix(const Gate& g) {
  const double r = 1.0 / std::sqrt(2.0);
  const Amplitude i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::H: return {{{r, r}, {r, -r}}};
    case GateKind::X: return {{{0.0, 1.0}, {1.0, 0.0}}};
    case GateKind::Z: return {{{1.0, 0.0}, {0.0, -1.0}}};
    case GateKind::S: return {{{1.0, 0.0}, {0.0, i}}};
    case GateKind::Sdg: return {{{1.0, 0.0}, {0.0, -i}}};
    case GateKind::Ry: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      return {{{c, -s}, {s, c}}};
    }
    default: break;
  }
  throw SimulationError("not a single-wire unitary");
}

void check_gate_dims(const Gate& g, const RadixIndex& idx) {
  const auto& dims = idx.dims();
  if (g.kind == GateKind::Mct) throw SimulationError("abstract MCT encountered; lower the circuit first");
  if (g.target >= dims.size()) throw SimulationError("gate target out of range");
  for (const auto& c : g.controls) {
    if (c.wire >= dims.size() || c.value >= dims[c.wire]) throw SimulationError("gate control invalid for state");
  }
  if (g.kind == GateKind::Increment && g.modulus > dims[g.target]) {
    throw SimulationError("increment modulus exceeds target dimension");
  }
}

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

RadixIndex::RadixIndex(std::vector<int> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
  std::uint64_t s = 1;
  for (std::size_t w = dims_.size(); w-- > 0;) {
    if (dims_[w] < 2 || dims_[w] > kMaxWireDim) throw SimulationError("wire dimension out of range");
    strides_[w] = s;
    if (s > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(dims_[w])) {
      throw InstanceTooLarge("state index space exceeds 64-bit range");
    }
    s *= static_cast<std::uint64_t>(dims_[w]);
  }
  size_ = s;
}

std::uint64_t RadixIndex::encode(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size()) throw SimulationError("digit count mismatch");
  std::uint64_t out = 0;
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (digits[w] < 0 || digits[w] >= dims_[w]) throw SimulationError("digit out of range");
    out += static_cast<std::uint64_t>(digits[w]) * strides_[w];
  }
  return out;
}

std::vector<int> RadixIndex::decode(std::uint64_t index) const {
  std::vector<int> out(dims_.size());
  for (std::size_t w = 0; w < dims_.size(); ++w) out[w] = digit(index, w);
  return out;
}

std::string RadixIndex::label(std::uint64_t index, const std::vector<Wire>& wires) const {
  std::string out;
  out.reserve(wires.size());
  for (Wire w : wires) out.push_back(static_cast<char>('0' + digit(index, w)));
  return out;
}

StateVector::StateVector(std::vector<int> dims, std::uint64_t index) : index_(std::move(dims)) {
  if (index_.size() > kDenseMaxAmplitudes) {
    throw InstanceTooLarge("dense state of " + std::to_string(index_.size()) + " amplitudes exceeds cap");
  }
  if (index >= index_.size()) throw SimulationError("basis index out of range");
  amps_.assign(index_.size(), Amplitude{0.0, 0.0});
  amps_[index] = 1.0;
}

StateVector::StateVector(std::vector<int> dims, std::vector<Amplitude> amplitudes)
    : index_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (amps_.size() != index_.size()) throw SimulationError("amplitude count does not match dimensions");
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply(const Gate& g) {
  check_gate_dims(g, index_);
  const auto& dims = index_.dims();
  const std::size_t nw = dims.size();

  std::vector<bool> fixed(nw, false);
  fixed[g.target] = true;
  std::uint64_t base = 0;
  for (const auto& c : g.controls) {
    fixed[c.wire] = true;
    base += static_cast<std::uint64_t>(c.value) * index_.stride(c.wire);
  }

  // Trailing free wires form one contiguous block; the rest are walked with
  // an odometer.
  Wire lowest_fixed = 0;
  for (Wire w = 0; w < nw; ++w)
    if (fixed[w]) lowest_fixed = w;
  const std::uint64_t block = index_.stride(lowest_fixed);
  std::vector<Wire> outer;
  for (Wire w = 0; w < lowest_fixed; ++w)
    if (!fixed[w]) outer.push_back(w);

  const std::uint64_t st = index_.stride(g.target);
  const bool is_inc = g.kind == GateKind::Increment;
  Mat2 u{};
  if (!is_inc) u = single_matrix(g);
  const int m = is_inc ? g.modulus : 2;
  const int shift = is_inc ? positive_mod(g.delta, m) : 0;
  std::array<Amplitude, kMaxWireDim> buf{};

  std::vector<int> odo(outer.size(), 0);
  std::uint64_t offset = 0;
  while (true) {
    const std::uint64_t start = base + offset;
    for (std::uint64_t j = 0; j < block; ++j) {
      const std::uint64_t i0 = start + j;
      if (is_inc) {
        if (shift == 0) continue;
        for (int k = 0; k < m; ++k) buf[static_cast<std::size_t>(k)] = amps_[i0 + static_cast<std::uint64_t>(k) * st];
        for (int k = 0; k < m; ++k) {
          amps_[i0 + static_cast<std::uint64_t>((k + shift) % m) * st] = buf[static_cast<std::size_t>(k)];
        }
      } else {
        const Amplitude a0 = amps_[i0], a1 = amps_[i0 + st];
        amps_[i0] = u[0][0] * a0 + u[0][1] * a1;
        amps_[i0 + st] = u[1][0] * a0 + u[1][1] * a1;
      }
    }
    // advance odometer, least significant outer wire first
    std::size_t k = outer.size();
    while (k > 0) {
      --k;
      const Wire w = outer[k];
      offset += index_.stride(w);
      if (++odo[k] < dims[w]) break;
      offset -= index_.stride(w) * static_cast<std::uint64_t>(dims[w]);
      odo[k] = 0;
      if (k == 0) return;
    }
    if (outer.empty()) return;
  }
}

SparseState::SparseState(std::vector<int> dims, std::uint64_t index) : index_(std::move(dims)) {
  if (index >= index_.size()) throw SimulationError("basis index out of range");
  amps_.emplace(index, Amplitude{1.0, 0.0});
}

void SparseState::set(std::uint64_t index, Amplitude a) {
  if (index >= index_.size()) throw SimulationError("basis index out of range");
  if (a == Amplitude{}) {
    amps_.erase(index);
  } else {
    amps_[index] = a;
  }
}

Amplitude SparseState::get(std::uint64_t index) const {
  auto it = amps_.find(index);
  return it == amps_.end() ? Amplitude{} : it->second;
}

double SparseState::norm() const {
  double s = 0;
  for (const auto& [i, a] : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void SparseState::apply(const Gate& g) {
  check_gate_dims(g, index_);
  const std::uint64_t st = index_.stride(g.target);
  const bool is_inc = g.kind == GateKind::Increment;

  auto satisfied = [&](std::uint64_t idx) {
    for (const auto& c : g.controls)
      if (index_.digit(idx, c.wire) != c.value) return false;
    return true;
  };

  if (is_inc) {
    const int m = g.modulus;
    const int shift = positive_mod(g.delta, m);
    if (shift == 0) return;
    std::unordered_map<std::uint64_t, Amplitude> out;
    out.reserve(amps_.size());
    for (const auto& [idx, a] : amps_) {
      const int t = index_.digit(idx, g.target);
      if (t < m && satisfied(idx)) {
        const int nt = (t + shift) % m;
        out.emplace(idx - static_cast<std::uint64_t>(t) * st + static_cast<std::uint64_t>(nt) * st, a);
      } else {
        out.emplace(idx, a);
      }
    }
    amps_.swap(out);
    return;
  }

  const Mat2 u = single_matrix(g);
  std::unordered_map<std::uint64_t, Amplitude> out;
  out.reserve(amps_.size() * 2);
  for (const auto& [idx, a] : amps_) {
    const int t = index_.digit(idx, g.target);
    if (t >= 2 || !satisfied(idx)) {
      out[idx] += a;
      continue;
    }
    const std::uint64_t i0 = idx - static_cast<std::uint64_t>(t) * st;
    out[i0] += u[0][static_cast<std::size_t>(t)] * a;
    out[i0 + st] += u[1][static_cast<std::size_t>(t)] * a;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (std::norm(it->second) < 1e-30) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  amps_.swap(out);
}

StateVector SparseState::to_dense() const {
  if (index_.size() > kDenseMaxAmplitudes) throw InstanceTooLarge("state too large for dense conversion");
  std::vector<Amplitude> amps(index_.size());
  for (const auto& [i, a] : amps_) amps[i] = a;
  return StateVector(index_.dims(), std::move(amps));
}

namespace {

void check_runnable(const Circuit& c, const std::vector<int>& dims) {
  if (c.wires().dims != dims) throw SimulationError("initial state dimensions do not match circuit wires");
  if (c.has_abstract_gates()) throw SimulationError("abstract MCT encountered; lower the circuit first");
}

}  // namespace

StateVector run(const Circuit& c, const StateVector& initial) {
  check_runnable(c, initial.dims());
  StateVector psi = initial;
  for (const auto& g : c.gates()) psi.apply(g);
  return psi;
}

StateVector run(const Circuit& c, std::uint64_t basis_index) {
  return run(c, StateVector(c.wires().dims, basis_index));
}

SparseState run_sparse(const Circuit& c, SparseState state) {
  check_runnable(c, state.dims());
  for (const auto& g : c.gates()) state.apply(g);
  return state;
}

std::map<std::string, double> probabilities(const StateVector& psi, const std::vector<Wire>& wires) {
  for (Wire w : wires)
    if (w >= psi.dims().size()) throw SimulationError("wire out of range");
  std::map<std::string, double> out;
  const auto& amps = psi.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    out[psi.index().label(i, wires)] += p;
  }
  return out;
}

std::map<std::string, double> probabilities(const SparseState& psi, const std::vector<Wire>& wires) {
  for (Wire w : wires)
    if (w >= psi.dims().size()) throw SimulationError("wire out of range");
  // Sum in index order so the result does not depend on hash iteration order.
  std::vector<std::pair<std::uint64_t, double>> entries;
  entries.reserve(psi.support_size());
  for (const auto& [i, a] : psi.amplitudes()) entries.emplace_back(i, std::norm(a));
  std::sort(entries.begin(), entries.end());
  std::map<std::string, double> out;
  for (const auto& [i, p] : entries) out[psi.index().label(i, wires)] += p;
  return out;
}

std::map<std::string, std::size_t> sample(const std::map<std::string, double>& probs, std::size_t shots,
                                          std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  std::vector<std::string> keys;
  std::vector<double> cumulative;
  double total = 0;
  for (const auto& [k, p] : probs) {
    total += p;
    keys.push_back(k);
    cumulative.push_back(total);
  }
  if (keys.empty() || total <= 0) throw std::invalid_argument("cannot sample from an empty distribution");

  std::mt19937_64 rng(seed);
  std::map<std::string, std::size_t> hist;
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++hist[keys[static_cast<std::size_t>(it - cumulative.begin())]];
  }
  return hist;
}

std::map<std::string, std::size_t> sample(const StateVector& psi, const std::vector<Wire>& wires,
                                          std::size_t shots, std::uint64_t seed) {
  return sample(probabilities(psi, wires), shots, seed);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Amplitude aik = a(i, k);
      if (aik == Amplitude{}) continue;
      const Amplitude* brow = &b.data[k * b.cols];
      Amplitude* orow = &out.data[i * out.cols];
      for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

std::vector<Amplitude> operator*(const Matrix& a, const std::vector<Amplitude>& v) {
  if (a.cols != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Amplitude> out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Amplitude s{};
    for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix adjoint(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  double d = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

double max_abs_diff_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < b.data.size(); ++i)
    if (std::abs(b.data[i]) > std::abs(b.data[pivot])) pivot = i;
  Amplitude phase{1.0, 0.0};
  if (std::abs(b.data[pivot]) > 0 && std::abs(a.data[pivot]) > 0) {
    phase = a.data[pivot] / b.data[pivot];
    phase /= std::abs(phase);
  }
  double d = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - phase * b.data[i]));
  return d;
}

Matrix unitary_of(const Circuit& c) {
  const RadixIndex idx(c.wires().dims);
  if (idx.size() > kUnitaryMaxDim) {
    throw InstanceTooLarge("unitary_of limited to dimension products <= " + std::to_string(kUnitaryMaxDim));
  }
  const auto n = static_cast<std::size_t>(idx.size());
  Matrix u(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const StateVector col = run(c, j);
    for (std::size_t i = 0; i < n; ++i) u(i, j) = col[i];
  }
  return u;
}

}  // namespace cliqueq
