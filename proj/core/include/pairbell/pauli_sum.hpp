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
#include <cstdint>
#include <string>
#include <vector>

#include "pairbell/settings.hpp"
#include "pairbell/state_vector.hpp"

namespace pairbell {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

struct PauliTerm {
  std::complex<double> coefficient;
  std::vector<Pauli> labels;  // one per site, site 1 first
};

/// A weighted sum of n-site Pauli strings.
class PauliSum {
 public:
  PauliSum(int site_count, std::vector<PauliTerm> terms);

  int site_count() const { return site_count_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Canonical form: duplicate strings combined, coefficients below
  /// `drop_tol` in magnitude dropped, strings sorted lexicographically
  /// (I < X < Y < Z).
  PauliSum merged(double drop_tol = 1e-14) const;

  /// Pauli strings are Hermitian, so the sum is Hermitian exactly when every
  /// merged coefficient is real (within `tol`).
  bool is_hermitian(double tol = 1e-10) const;

  /// Sum of coefficient magnitudes; an upper bound on the spectral radius.
  double coefficient_l1_norm() const;

  std::string str() const;

 private:
  int site_count_ = 0;
  std::vector<PauliTerm> terms_;
};

/// The dichotomic observable v . (sigma_x, sigma_y, sigma_z) for a unit Bloch
/// vector, as a single-site PauliSum (exactly-zero components are omitted).
PauliSum observable_from_bloch(const Vec3& v);

/// Matrix-free linear action: X flips a bit, Y flips with an +-i phase, Z
/// applies a sign. Returns the (generally unnormalized) image vector.
StateVector apply_pauli_sum(const PauliSum& op, const StateVector& state);

}  // namespace pairbell
