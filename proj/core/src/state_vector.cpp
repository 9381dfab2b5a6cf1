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

#include "pairbell/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pairbell {

namespace {

void check_qubit_range(int qubit_count, int qubit_cap) {
  if (qubit_count < 2 || qubit_count > qubit_cap) {
    throw std::invalid_argument("qubit_count " + std::to_string(qubit_count) +
                                " out of range [2, " + std::to_string(qubit_cap) + "]");
  }
}

}  // namespace

StateVector::StateVector(int qubit_count, std::vector<std::complex<double>> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  if (qubit_count < 1 || qubit_count > 62) {
    throw std::invalid_argument("qubit_count " + std::to_string(qubit_count) +
                                " out of range");
  }
  if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
    throw std::invalid_argument("amplitude vector has " +
                                std::to_string(amplitudes_.size()) + " entries, expected 2^" +
                                std::to_string(qubit_count));
  }
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const std::complex<double>& a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector make_ghz(int qubit_count, int qubit_cap) {
  check_qubit_range(qubit_count, qubit_cap);
  std::vector<std::complex<double>> amplitudes(std::size_t{1} << qubit_count);
  const double r = 1.0 / std::sqrt(2.0);
  amplitudes.front() = r;
  amplitudes.back() = r;
  return StateVector(qubit_count, std::move(amplitudes));
}

StateVector make_gghz(int qubit_count, double alpha, int qubit_cap) {
  check_qubit_range(qubit_count, qubit_cap);
  std::vector<std::complex<double>> amplitudes(std::size_t{1} << qubit_count);
  amplitudes.front() = std::cos(alpha);
  amplitudes.back() = std::sin(alpha);
  return StateVector(qubit_count, std::move(amplitudes));
}

StateVector make_slice(double alpha, double beta, double gamma, double delta) {
  std::vector<std::complex<double>> amplitudes(16);
  amplitudes[0] = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double f[3][2] = {{std::cos(beta), std::sin(beta)},
                          {std::cos(gamma), std::sin(gamma)},
                          {std::cos(delta), std::sin(delta)}};
  // Site 1 is |1> on the second branch; sites 2..4 are the product factors.
  for (int b2 = 0; b2 < 2; ++b2) {
    for (int b3 = 0; b3 < 2; ++b3) {
      for (int b4 = 0; b4 < 2; ++b4) {
        amplitudes[static_cast<std::size_t>(8 | b2 << 2 | b3 << 1 | b4)] =
            sa * f[0][b2] * f[1][b3] * f[2][b4];
      }
    }
  }
  return StateVector(4, std::move(amplitudes));
}

}  // namespace pairbell
