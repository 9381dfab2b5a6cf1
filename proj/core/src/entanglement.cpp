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

#include "pairbell/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "pairbell/bell_expression.hpp"
#include "pairbell/quantum.hpp"
#include "pairbell/settings.hpp"

namespace pairbell {

double n_tangle(const StateVector& state) {
  const int n = state.qubit_count();
  if (n % 2 != 0) {
    throw std::invalid_argument("n_tangle: defined for even qubit counts only, got " +
                                std::to_string(n));
  }
  // sigma_y^{(x)n} |b> = i^n (-1)^{popcount(b)} |~b>, so the overlap with the
  // conjugated state is a single pass over amplitude pairs (b, ~b).
  const std::uint64_t dim = state.dimension();
  const std::uint64_t full = dim - 1;
  const double front_sign = n % 4 == 0 ? 1.0 : -1.0;  // i^n for even n
  std::complex<double> overlap = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b) & 1) ? -front_sign : front_sign;
    overlap += sign * state[b ^ full] * state[b];
  }
  double tau = std::norm(overlap);
  if (tau < -1e-9 || tau > 1.0 + 1e-9) {
    throw std::runtime_error("n_tangle: value " + std::to_string(tau) +
                             " outside [0,1]; state is not normalized");
  }
  return std::clamp(tau, 0.0, 1.0);
}

TangleRelation nonlocality_tangle_relation(const StateVector& state) {
  if (state.qubit_count() != 4) {
    throw std::invalid_argument("nonlocality_tangle_relation: needs a 4-qubit state, got " +
                                std::to_string(state.qubit_count()) + " qubits");
  }
  static const BellExpression expr = BellExpression::build(4, canonical_sign(4));
  static const MeasurementSettings settings = canonical_settings(4);

  TangleRelation relation;
  relation.bell_value = expectation(expr, settings, state);
  relation.two_sqrt_tau = 2.0 * std::sqrt(n_tangle(state));
  relation.residual = relation.bell_value - relation.two_sqrt_tau;
  return relation;
}

ViolationThreshold violation_threshold(int site_count) {
  if (site_count < 2) {
    throw std::invalid_argument("violation_threshold: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  ViolationThreshold threshold;
  threshold.this_family = site_count % 4 == 2 ? 1.0 / std::sqrt(2.0) : 0.5;
  threshold.scarani_gisin = std::pow(2.0, -0.5 * (site_count - 1));
  return threshold;
}

std::vector<ScanRecord> scan_alpha(int site_count, std::span<const double> alphas) {
  if (alphas.empty()) {
    throw std::invalid_argument("scan_alpha: empty alpha grid");
  }
  const BellExpression expr = BellExpression::build(site_count, canonical_sign(site_count));
  const MeasurementSettings settings = canonical_settings(site_count);

  std::vector<double> grid(alphas.begin(), alphas.end());
  std::sort(grid.begin(), grid.end());

  std::vector<ScanRecord> records;
  records.reserve(grid.size());
  for (double alpha : grid) {
    const StateVector state = make_gghz(site_count, alpha);
    ScanRecord record;
    record.alpha = alpha;
    record.sin_2alpha = std::sin(2.0 * alpha);
    record.bell_value = expectation(expr, settings, state);
    if (site_count == 4) {
      const double tau = n_tangle(state);
      record.tau = tau;
      record.two_sqrt_tau = 2.0 * std::sqrt(tau);
    }
    record.violation = record.bell_value > 1.0 + 1e-12;
    records.push_back(record);
  }
  return records;
}

}  // namespace pairbell
