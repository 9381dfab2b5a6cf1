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

#include "pairbell/pauli_sum.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace pairbell {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::invalid_argument("bad Pauli label");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("bad Pauli label '") + c + "'");
  }
}

PauliSum::PauliSum(int site_count, std::vector<PauliTerm> terms)
    : site_count_(site_count), terms_(std::move(terms)) {
  if (site_count < 1) {
    throw std::invalid_argument("PauliSum: site_count must be >= 1");
  }
  for (const PauliTerm& term : terms_) {
    if (term.labels.size() != static_cast<std::size_t>(site_count)) {
      throw std::invalid_argument("PauliSum: every string needs one label per site");
    }
  }
}

PauliSum PauliSum::merged(double drop_tol) const {
  std::map<std::vector<Pauli>, std::complex<double>> combined;
  for (const PauliTerm& term : terms_) {
    combined[term.labels] += term.coefficient;
  }
  std::vector<PauliTerm> out;
  out.reserve(combined.size());
  for (auto& [labels, coefficient] : combined) {
    if (std::abs(coefficient) >= drop_tol) {
      out.push_back(PauliTerm{coefficient, labels});
    }
  }
  return PauliSum(site_count_, std::move(out));
}

bool PauliSum::is_hermitian(double tol) const {
  const PauliSum canonical = merged();
  for (const PauliTerm& term : canonical.terms()) {
    if (std::abs(term.coefficient.imag()) > tol) {
      return false;
    }
  }
  return true;
}

double PauliSum::coefficient_l1_norm() const {
  const PauliSum canonical = merged();
  double sum = 0.0;
  for (const PauliTerm& term : canonical.terms()) {
    sum += std::abs(term.coefficient);
  }
  return sum;
}

std::string PauliSum::str() const {
  std::ostringstream out;
  bool first = true;
  for (const PauliTerm& term : terms_) {
    if (!first) {
      out << " + ";
    }
    first = false;
    out << "(" << term.coefficient.real();
    if (term.coefficient.imag() != 0.0) {
      out << (term.coefficient.imag() > 0 ? "+" : "") << term.coefficient.imag() << "i";
    }
    out << ") ";
    for (Pauli p : term.labels) {
      out << pauli_char(p);
    }
  }
  if (first) {
    out << "0";
  }
  return out.str();
}

PauliSum observable_from_bloch(const Vec3& v) {
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("observable_from_bloch: Bloch vector norm " +
                                std::to_string(norm) + " is not 1");
  }
  std::vector<PauliTerm> terms;
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int c = 0; c < 3; ++c) {
    if (v[static_cast<std::size_t>(c)] != 0.0) {
      terms.push_back(PauliTerm{v[static_cast<std::size_t>(c)], {axes[c]}});
    }
  }
  return PauliSum(1, std::move(terms));
}

StateVector apply_pauli_sum(const PauliSum& op, const StateVector& state) {
  if (op.site_count() != state.qubit_count()) {
    throw std::invalid_argument("apply_pauli_sum: operator on " +
                                std::to_string(op.site_count()) + " sites, state on " +
                                std::to_string(state.qubit_count()));
  }
  const int n = state.qubit_count();
  const std::size_t dim = state.dimension();
  std::vector<std::complex<double>> out(dim);

  constexpr std::complex<double> i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const PauliTerm& term : op.terms()) {
    // Site i acts on bit n-1-i (site 1 most significant).
    std::uint64_t flip_mask = 0;   // X and Y flip the bit
    std::uint64_t phase_mask = 0;  // Y and Z read the bit for a sign
    int y_count = 0;
    for (int site = 0; site < n; ++site) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - site);
      switch (term.labels[static_cast<std::size_t>(site)]) {
        case Pauli::I: break;
        case Pauli::X: flip_mask |= bit; break;
        case Pauli::Y: flip_mask |= bit; phase_mask |= bit; ++y_count; break;
        case Pauli::Z: phase_mask |= bit; break;
      }
    }
    const std::complex<double> base = term.coefficient * i_powers[y_count & 3];
    const auto amps = state.amplitudes();
    for (std::uint64_t b = 0; b < dim; ++b) {
      const std::complex<double> contribution =
          (std::popcount(b & phase_mask) & 1) ? -base : base;
      out[b ^ flip_mask] += contribution * amps[b];
    }
  }
  return StateVector(n, std::move(out));
}

}  // namespace pairbell
