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

#include <optional>
#include <span>
#include <vector>

#include "pairbell/state_vector.hpp"

namespace pairbell {

/// Wong-Christensen n-tangle |<psi*| sigma_y^{(x)n} |psi>|^2 for even n,
/// clamped to [0, 1]. psi* conjugates the amplitudes in the computational
/// basis. Equals sin^2(2 alpha) on the n=4 GGHZ family.
double n_tangle(const StateVector& state);

struct TangleRelation {
  double bell_value = 0.0;    // expectation of the canonical 4-qubit operator
  double two_sqrt_tau = 0.0;  // 2 sqrt(four-tangle)
  double residual = 0.0;      // bell_value - two_sqrt_tau
};

/// Both sides of the nonlocality-entanglement relation for a 4-qubit state:
/// the Bell value under the calibrated sign and all-x/y settings against
/// 2 sqrt(tau).
TangleRelation nonlocality_tangle_relation(const StateVector& state);

struct ViolationThreshold {
  double this_family = 0.0;    // sin(2 alpha) above which these inequalities violate
  double scarani_gisin = 0.0;  // comparison threshold 1/sqrt(2^{n-1})
};

/// (1/sqrt2 for n = 2 mod 4, else 1/2; 1/sqrt(2^{n-1})).
ViolationThreshold violation_threshold(int site_count);

struct ScanRecord {
  double alpha = 0.0;
  double sin_2alpha = 0.0;
  std::optional<double> tau;           // n = 4 only
  double bell_value = 0.0;
  std::optional<double> two_sqrt_tau;  // n = 4 only
  bool violation = false;              // bell_value > 1 + 1e-12
};

/// GGHZ_n(alpha) swept over the grid: Bell value under the calibrated sign
/// and canonical settings, plus the four-tangle columns when n = 4. Records
/// are returned in ascending alpha.
std::vector<ScanRecord> scan_alpha(int site_count, std::span<const double> alphas);

}  // namespace pairbell
