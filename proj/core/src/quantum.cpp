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

#include "pairbell/quantum.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairbell {

namespace {

using Complex = std::complex<double>;

void check_dimensions(const BellExpression& expr, const MeasurementSettings& settings,
                      int state_qubits) {
  if (expr.site_count() != settings.site_count) {
    throw std::invalid_argument("expression on " + std::to_string(expr.site_count()) +
                                " sites, settings on " + std::to_string(settings.site_count));
  }
  if (state_qubits >= 0 && expr.site_count() != state_qubits) {
    throw std::invalid_argument("expression on " + std::to_string(expr.site_count()) +
                                " sites, state on " + std::to_string(state_qubits) +
                                " qubits");
  }
  validate_settings(settings);
}

// In-place action of (v . sigma) on one site: the 2x2 block
//   [ vz       vx - i vy ]
//   [ vx+i vy  -vz       ]
// applied across every amplitude pair that differs in the site's bit.
void apply_bloch_observable(std::vector<Complex>& amps, int qubit_count, int site,
                            const Vec3& v) {
  const std::uint64_t bit = std::uint64_t{1} << (qubit_count - 1 - site);
  const Complex off_upper(v[0], -v[1]);
  const Complex off_lower(v[0], v[1]);
  const double vz = v[2];
  const std::uint64_t dim = std::uint64_t{1} << qubit_count;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & bit) {
      continue;
    }
    const Complex a0 = amps[b];
    const Complex a1 = amps[b | bit];
    amps[b] = vz * a0 + off_upper * a1;
    amps[b | bit] = off_lower * a0 - vz * a1;
  }
}

Complex inner_product(std::span<const Complex> bra, std::span<const Complex> ket) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) {
    sum += std::conj(bra[i]) * ket[i];
  }
  return sum;
}

// One power-iteration run on the positive-semidefinite operator
// x -> shift*x + direction*(A x). Returns the converged Rayleigh quotient.
double power_iteration(const PauliSum& op, double shift, double direction,
                       const PowerIterationOptions& options) {
  const std::size_t dim = std::size_t{1} << op.site_count();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Complex> x(dim);
  for (Complex& a : x) {
    a = Complex(gauss(rng), gauss(rng));
  }
  double norm = std::sqrt(std::real(inner_product(x, x)));
  for (Complex& a : x) {
    a /= norm;
  }

  StateVector current(op.site_count(), std::move(x));
  double rayleigh_prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    StateVector image = apply_pauli_sum(op, current);
    std::vector<Complex>& y = image.data();
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] = shift * current[i] + direction * y[i];
    }
    const double rayleigh = std::real(inner_product(current.amplitudes(), y));
    norm = std::sqrt(std::real(inner_product(y, y)));
    if (norm == 0.0) {
      // The start vector lies in the kernel; the shifted spectrum is
      // nonnegative, so 0 is the extremal value in this direction.
      return 0.0;
    }
    for (Complex& a : y) {
      a /= norm;
    }
    current = std::move(image);
    if (std::abs(rayleigh - rayleigh_prev) < options.tolerance) {
      return rayleigh;
    }
    rayleigh_prev = rayleigh;
  }
  throw std::runtime_error("power iteration did not converge within " +
                           std::to_string(options.max_iterations) + " iterations");
}

}  // namespace

double expectation(const BellExpression& expr, const MeasurementSettings& settings,
                   const StateVector& state) {
  check_dimensions(expr, settings, state.qubit_count());
  const int n = expr.site_count();

  double total = 0.0;
  std::vector<Complex> work;
  for (const CorrelationTerm& term : expr.terms()) {
    work.assign(state.amplitudes().begin(), state.amplitudes().end());
    for (int site = 0; site < n; ++site) {
      const int observable = term.choice[static_cast<std::size_t>(site)];
      apply_bloch_observable(work, n, site,
                             settings.vectors[static_cast<std::size_t>(site)]
                                             [static_cast<std::size_t>(observable - 1)]);
    }
    const Complex correlator = inner_product(state.amplitudes(), work);
    if (std::abs(correlator.imag()) >= 1e-10) {
      throw std::runtime_error("correlator has imaginary residue " +
                               std::to_string(correlator.imag()));
    }
    total += term.coeff_sign * correlator.real();
  }
  return total * expr.normalization();
}

PauliSum bell_pauli_expansion(const BellExpression& expr,
                              const MeasurementSettings& settings) {
  check_dimensions(expr, settings, -1);
  const int n = expr.site_count();
  const double normalization = expr.normalization();
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};

  std::map<std::vector<Pauli>, Complex> combined;
  std::vector<Pauli> labels(static_cast<std::size_t>(n));

  // Depth-first product over sites; zero components are skipped.
  auto expand = [&](auto&& self, int site, double coefficient,
                    const CorrelationTerm& term) -> void {
    if (site == n) {
      combined[labels] += coefficient;
      return;
    }
    const int observable = term.choice[static_cast<std::size_t>(site)];
    const Vec3& v = settings.vectors[static_cast<std::size_t>(site)]
                                    [static_cast<std::size_t>(observable - 1)];
    for (int c = 0; c < 3; ++c) {
      const double component = v[static_cast<std::size_t>(c)];
      if (component == 0.0) {
        continue;
      }
      labels[static_cast<std::size_t>(site)] = axes[c];
      self(self, site + 1, coefficient * component, term);
    }
  };
  for (const CorrelationTerm& term : expr.terms()) {
    expand(expand, 0, normalization * term.coeff_sign, term);
  }

  std::vector<PauliTerm> terms;
  terms.reserve(combined.size());
  for (auto& [string_labels, coefficient] : combined) {
    if (std::abs(coefficient) >= 1e-14) {
      terms.push_back(PauliTerm{coefficient, string_labels});
    }
  }
  return PauliSum(n, std::move(terms));
}

PauliSum ghz_stabilizer(int qubit_count) {
  if (qubit_count < 2 || qubit_count > 26) {
    throw std::invalid_argument("ghz_stabilizer: qubit_count " +
                                std::to_string(qubit_count) + " out of range [2, 26]");
  }
  // (prod (X + iY) + prod (X - iY)) / 2 keeps the even-Y strings with
  // coefficient (-1)^{#Y/2}.
  std::vector<PauliTerm> terms;
  terms.reserve(std::size_t{1} << (qubit_count - 1));
  for (std::uint64_t y_set = 0; y_set < (std::uint64_t{1} << qubit_count); ++y_set) {
    const int y_count = std::popcount(y_set);
    if (y_count % 2 != 0) {
      continue;
    }
    std::vector<Pauli> labels(static_cast<std::size_t>(qubit_count), Pauli::X);
    for (int site = 0; site < qubit_count; ++site) {
      if ((y_set >> site) & 1) {
        labels[static_cast<std::size_t>(site)] = Pauli::Y;
      }
    }
    terms.push_back(PauliTerm{y_count % 4 == 0 ? 1.0 : -1.0, std::move(labels)});
  }
  return PauliSum(qubit_count, std::move(terms));
}

EigenpairCheck eigenvector_residual(const PauliSum& op, const StateVector& state) {
  const StateVector image = apply_pauli_sum(op, state);
  const Complex rayleigh = inner_product(state.amplitudes(), image.amplitudes());
  double residual_sq = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    residual_sq += std::norm(image[i] - rayleigh * state[i]);
  }
  return {rayleigh.real(), std::sqrt(residual_sq)};
}

double ghz_stabilizer_check(int qubit_count, int qubit_cap) {
  const StateVector ghz = make_ghz(qubit_count, qubit_cap);
  const EigenpairCheck check = eigenvector_residual(ghz_stabilizer(qubit_count), ghz);
  if (check.residual >= 1e-10) {
    throw std::runtime_error("ghz_stabilizer_check: proportionality failed, residual " +
                             std::to_string(check.residual));
  }
  return check.eigenvalue;
}

double max_abs_eigenvalue(const PauliSum& op, const PowerIterationOptions& options) {
  if (!op.is_hermitian()) {
    throw std::invalid_argument("max_abs_eigenvalue: operator is not Hermitian");
  }
  const PauliSum canonical = op.merged();
  const double shift = canonical.coefficient_l1_norm();
  if (shift == 0.0) {
    return 0.0;
  }
  // A + cI reveals the top of the spectrum, cI - A the bottom; c bounds the
  // spectral radius, so both shifted operators are positive semidefinite.
  const double top = power_iteration(canonical, shift, 1.0, options) - shift;
  const double bottom = shift - power_iteration(canonical, shift, -1.0, options);
  return std::max(std::abs(top), std::abs(bottom));
}

}  // namespace pairbell
