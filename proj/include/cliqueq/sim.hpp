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

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliqueq/circuit.hpp"

namespace cliqueq {

using Amplitude = std::complex<double>;

namespace tol {
inline constexpr double kState = 1e-9;
inline constexpr double kAncilla = 1e-12;
}  // namespace tol

/// Largest dense amplitude array we allocate (2^26 amplitudes, 1 GiB).
inline constexpr std::uint64_t kDenseMaxAmplitudes = std::uint64_t{1} << 26;
/// Largest dimension product for which unitary_of builds a matrix.
inline constexpr std::uint64_t kUnitaryMaxDim = 4096;

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class SimulationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mixed-radix indexing with wire 0 most significant.
class RadixIndex {
 public:
  RadixIndex() = default;
  explicit RadixIndex(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t stride(Wire w) const { return strides_[w]; }
  int digit(std::uint64_t index, Wire w) const {
    return static_cast<int>((index / strides_[w]) % static_cast<std::uint64_t>(dims_[w]));
  }
  std::uint64_t encode(const std::vector<int>& digits) const;
  std::vector<int> decode(std::uint64_t index) const;
  /// Digits of the selected wires as a string, e.g. "0120".
  std::string label(std::uint64_t index, const std::vector<Wire>& wires) const;

 private:
  std::vector<int> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 0;
};

/// Dense state over the full mixed-radix index space.
class StateVector {
 public:
  StateVector() = default;
  /// Basis state `index`.
  StateVector(std::vector<int> dims, std::uint64_t index);
  StateVector(std::vector<int> dims, std::vector<Amplitude> amplitudes);

  const RadixIndex& index() const { return index_; }
  const std::vector<int>& dims() const { return index_.dims(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  Amplitude operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  void apply(const Gate& g);

 private:
  RadixIndex index_;
  std::vector<Amplitude> amps_;
};

/// Sparse state storing only nonzero amplitudes; same semantics as StateVector.
class SparseState {
 public:
  SparseState() = default;
  SparseState(std::vector<int> dims, std::uint64_t index);

  const RadixIndex& index() const { return index_; }
  const std::vector<int>& dims() const { return index_.dims(); }
  const std::unordered_map<std::uint64_t, Amplitude>& amplitudes() const { return amps_; }
  void set(std::uint64_t index, Amplitude a);
  Amplitude get(std::uint64_t index) const;
  double norm() const;
  std::size_t support_size() const { return amps_.size(); }

  void apply(const Gate& g);
  StateVector to_dense() const;

 private:
  RadixIndex index_;
  std::unordered_map<std::uint64_t, Amplitude> amps_;
};

StateVector run(const Circuit& c, const StateVector& initial);
StateVector run(const Circuit& c, std::uint64_t basis_index);
SparseState run_sparse(const Circuit& c, SparseState state);

/// Marginal probabilities keyed by the digit string of `wires`.
std::map<std::string, double> probabilities(const StateVector& psi, const std::vector<Wire>& wires);
std::map<std::string, double> probabilities(const SparseState& psi, const std::vector<Wire>& wires);

/// Seeded multinomial sampling; deterministic for a given seed.
std::map<std::string, std::size_t> sample(const std::map<std::string, double>& probs, std::size_t shots,
                                          std::uint64_t seed);
std::map<std::string, std::size_t> sample(const StateVector& psi, const std::vector<Wire>& wires,
                                          std::size_t shots, std::uint64_t seed);

/// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Amplitude> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static Matrix identity(std::size_t n);

  Amplitude& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Amplitude operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Amplitude> operator*(const Matrix& a, const std::vector<Amplitude>& v);
Matrix adjoint(const Matrix& m);
/// Largest entrywise |a - b|.
double max_abs_diff(const Matrix& a, const Matrix& b);
/// Largest entrywise |a - phase * b| minimized over a global phase of b.
double max_abs_diff_up_to_phase(const Matrix& a, const Matrix& b);

/// Column j is run(c, basis j). Requires product of dims <= kUnitaryMaxDim.
Matrix unitary_of(const Circuit& c);

}  // namespace cliqueq
