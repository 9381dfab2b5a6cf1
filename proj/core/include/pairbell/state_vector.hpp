// Copyright 2026 The pairbell Authors
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
#include <cstddef>
#include <span>
#include <vector>

namespace pairbell {

/// Dense amplitudes of an n-qubit pure state (or an unnormalized vector, e.g.
/// the result of applying an operator). Basis index b maps site i to bit
/// n - i: site 1 is the most significant bit.
class StateVector {
 public:
  static constexpr int kDefaultQubitCap = 24;

  StateVector(int qubit_count, std::vector<std::complex<double>> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
  std::vector<std::complex<double>>& data() { return amplitudes_; }
  const std::vector<std::complex<double>>& data() const { return amplitudes_; }

  std::complex<double> operator[](std::size_t basis_index) const {
    return amplitudes_[basis_index];
  }

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;

 private:
  int qubit_count_ = 0;
  std::vector<std::complex<double>> amplitudes_;
};

/// (|0...0> + |1...1>)/sqrt(2) on `qubit_count` qubits.
StateVector make_ghz(int qubit_count, int qubit_cap = StateVector::kDefaultQubitCap);

/// cos(alpha)|0...0> + sin(alpha)|1...1>.
StateVector make_gghz(int qubit_count, double alpha,
                      int qubit_cap = StateVector::kDefaultQubitCap);

/// The four-qubit slice state
///   cos(a)|0000> + sin(a)|1>(cos(b)|0>+sin(b)|1>)(cos(c)|0>+sin(c)|1>)(cos(d)|0>+sin(d)|1>),
/// normalized by construction.
StateVector make_slice(double alpha, double beta, double gamma, double delta);

}  // namespace pairbell
