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

#include "pairbell/bell_expression.hpp"
#include "pairbell/pauli_sum.hpp"
#include "pairbell/settings.hpp"
#include "pairbell/state_vector.hpp"

namespace pairbell {

/// Quantum value <psi| B |psi> of the expression under the given settings,
/// evaluated term by term with matrix-free single-site applications. Every
/// correlator must have imaginary residue below 1e-10 (enforced); the real
/// parts are combined with the exact +-1 coefficients and scaled once.
double expectation(const BellExpression& expr, const MeasurementSettings& settings,
                   const StateVector& state);

/// The same operator as an explicit Pauli sum: every term's tensor product of
/// a.sigma observables fully expanded, duplicate strings merged, coefficients
/// below 1e-14 dropped. The result is Hermitian by construction.
PauliSum bell_pauli_expansion(const BellExpression& expr,
                              const MeasurementSettings& settings);

/// The GHZ stabilizer-like operator
///   A_n = (prod_j (sigma_x + i sigma_y)_j + prod_j (sigma_x - i sigma_y)_j) / 2,
/// expanded into the 2^{n-1} even-Y Pauli strings with coefficients +-1.
PauliSum ghz_stabilizer(int qubit_count);

struct EigenpairCheck {
  double eigenvalue = 0.0;  // Rayleigh quotient <psi|A|psi>
  double residual = 0.0;    // || A psi - <psi|A|psi> psi ||
};

/// Rayleigh quotient and proportionality residual of `state` under `op`.
EigenpairCheck eigenvector_residual(const PauliSum& op, const StateVector& state);

/// Applies A_n to the GHZ state, verifies proportionality (residual < 1e-10),
/// and returns the eigenvalue 2^{n-1}. Throws std::runtime_error if the
/// proportionality check fails.
double ghz_stabilizer_check(int qubit_count,
                            int qubit_cap = StateVector::kDefaultQubitCap);

struct PowerIterationOptions {
  double tolerance = 1e-10;     // on successive Rayleigh quotients
  int max_iterations = 10000;
  std::uint64_t seed = 12345;   // fixed seed for the random start
};

/// Largest |eigenvalue| of a Hermitian Pauli sum via shifted power iteration.
/// Both spectral ends are probed: iterating A + cI yields the top of the
/// spectrum and cI - A the bottom, with c the coefficient L1 norm (so both
/// shifted operators are positive semidefinite). Throws std::invalid_argument
/// for non-Hermitian input and std::runtime_error on non-convergence.
double max_abs_eigenvalue(const PauliSum& op, const PowerIterationOptions& options = {});

}  // namespace pairbell
