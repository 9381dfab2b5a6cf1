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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pairbell/pauli_sum.hpp"
#include "pairbell/state_vector.hpp"
#include "test_support.hpp"

namespace pairbell {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

// Independent oracle: numeric sigma_y^{(x)4} overlap through the generic
// Pauli machinery instead of the bit-pair pass.
double tangle_oracle(const StateVector& state) {
  const PauliSum sigma_y_4(4, {{1.0, {Pauli::Y, Pauli::Y, Pauli::Y, Pauli::Y}}});
  const StateVector image = apply_pauli_sum(sigma_y_4, state);
  std::complex<double> overlap = 0.0;
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    overlap += state[b] * image[b];  // <psi*| acts without conjugation
  }
  return std::norm(overlap);
}

StateVector permute_sites(const StateVector& state, const std::array<int, 4>& perm) {
  std::vector<std::complex<double>> out(16);
  for (std::size_t b = 0; b < 16; ++b) {
    std::size_t target = 0;
    for (int site = 0; site < 4; ++site) {
      const std::size_t bit = (b >> (3 - site)) & 1;
      target |= bit << (3 - perm[static_cast<std::size_t>(site)]);
    }
    out[target] = state[b];
  }
  return StateVector(4, std::move(out));
}

TEST(NTangle, GghzFamilyGivesSinSquared) {
  for (int k = 0; k <= 36; ++k) {
    const double alpha = kPi / 2 * k / 36.0;
    const double expected = std::pow(std::sin(2.0 * alpha), 2);
    EXPECT_NEAR(n_tangle(make_gghz(4, alpha)), expected, 1e-12) << "alpha=" << alpha;
  }
}

TEST(NTangle, ProductStateHasNoTangle) {
  std::vector<std::complex<double>> zeros(16);
  zeros[0] = 1.0;
  EXPECT_DOUBLE_EQ(n_tangle(StateVector(4, std::move(zeros))), 0.0);
}

TEST(NTangle, SliceClosedFormMatchesOverlapOracle) {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  for (int rep = 0; rep < 50; ++rep) {
    const double a = angle(rng), b = angle(rng), c = angle(rng), d = angle(rng);
    const StateVector state = make_slice(a, b, c, d);
    const double closed = std::pow(std::sin(2 * a) * std::sin(b) * std::sin(c) * std::sin(d), 2);
    EXPECT_NEAR(n_tangle(state), closed, 1e-12);
    EXPECT_NEAR(n_tangle(state), tangle_oracle(state), 1e-12);
  }
}

TEST(NTangle, SixSitesUsesTheSameOverlap) {
  // GGHZ_6: the same sin^2(2 alpha) closed form holds for any even n.
  EXPECT_NEAR(n_tangle(make_gghz(6, 0.4)), std::pow(std::sin(0.8), 2), 1e-12);
}

TEST(NTangle, RejectsOddSiteCounts) {
  EXPECT_THROW(n_tangle(make_ghz(3)), std::invalid_argument);
}

TEST(NTangle, InvariantUnderSitePermutation) {
  const std::array<std::array<int, 4>, 4> perms{
      {{1, 0, 2, 3}, {3, 2, 1, 0}, {1, 2, 3, 0}, {2, 0, 3, 1}}};
  const StateVector slice = make_slice(0.7, 0.9, 0.3, 1.2);
  const StateVector gghz = make_gghz(4, 0.6);
  for (const auto& perm : perms) {
    EXPECT_NEAR(n_tangle(permute_sites(slice, perm)), n_tangle(slice), 1e-12);
    EXPECT_NEAR(n_tangle(permute_sites(gghz, perm)), n_tangle(gghz), 1e-12);
  }
}

TEST(NTangle, StaysInUnitIntervalOnRandomStates) {
  std::mt19937_64 rng(888);
  for (int rep = 0; rep < 1000; ++rep) {
    const double tau = n_tangle(testing::random_state(4, rng));
    EXPECT_GE(tau, 0.0);
    EXPECT_LE(tau, 1.0);
  }
}

TEST(TangleRelation, GghzAndSliceStatesSatisfyIt) {
  const TangleRelation at_pi8 = nonlocality_tangle_relation(make_gghz(4, kPi / 8));
  EXPECT_NEAR(at_pi8.bell_value, kSqrt2, 1e-12);
  EXPECT_NEAR(at_pi8.two_sqrt_tau, kSqrt2, 1e-12);
  EXPECT_NEAR(at_pi8.residual, 0.0, 1e-12);

  const TangleRelation slice = nonlocality_tangle_relation(
      make_slice(kPi / 4, kPi / 3, kPi / 5, kPi / 7));
  EXPECT_LT(std::abs(slice.residual), 1e-9);

  std::vector<std::complex<double>> zeros(16);
  zeros[0] = 1.0;
  const TangleRelation product = nonlocality_tangle_relation(StateVector(4, std::move(zeros)));
  EXPECT_DOUBLE_EQ(product.bell_value, 0.0);
  EXPECT_DOUBLE_EQ(product.two_sqrt_tau, 0.0);
  EXPECT_DOUBLE_EQ(product.residual, 0.0);
}

TEST(TangleRelation, RejectsWrongQubitCount) {
  EXPECT_THROW(nonlocality_tangle_relation(make_ghz(3)), std::invalid_argument);
  EXPECT_THROW(nonlocality_tangle_relation(make_ghz(6)), std::invalid_argument);
}

TEST(ViolationThreshold, ResidueClassesAndComparison) {
  const ViolationThreshold four = violation_threshold(4);
  EXPECT_DOUBLE_EQ(four.this_family, 0.5);
  EXPECT_NEAR(four.scarani_gisin, 1.0 / std::sqrt(8.0), 1e-15);

  const ViolationThreshold six = violation_threshold(6);
  EXPECT_NEAR(six.this_family, 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(six.scarani_gisin, 1.0 / std::sqrt(32.0), 1e-15);

  // The two formulas coincide at n = 2.
  const ViolationThreshold two = violation_threshold(2);
  EXPECT_NEAR(two.this_family, two.scarani_gisin, 1e-15);

  EXPECT_THROW(violation_threshold(1), std::invalid_argument);
}

TEST(ScanAlpha, BoundaryRowAndMaximum) {
  const double grid[] = {kPi / 12, kPi / 4};
  const auto records = scan_alpha(4, grid);
  ASSERT_EQ(records.size(), 2u);

  // sin(2a) = 1/2: tau = 1/4 and bell_value = 1, flagged as no violation.
  EXPECT_NEAR(records[0].sin_2alpha, 0.5, 1e-12);
  ASSERT_TRUE(records[0].tau.has_value());
  EXPECT_NEAR(*records[0].tau, 0.25, 1e-12);
  EXPECT_NEAR(records[0].bell_value, 1.0, 1e-12);
  EXPECT_FALSE(records[0].violation);

  EXPECT_NEAR(*records[1].tau, 1.0, 1e-12);
  EXPECT_NEAR(records[1].bell_value, 2.0, 1e-12);
  EXPECT_TRUE(records[1].violation);
}

TEST(ScanAlpha, SixSitesHasNoTauColumns) {
  const double grid[] = {kPi / 4};
  const auto records = scan_alpha(6, grid);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].tau.has_value());
  EXPECT_FALSE(records[0].two_sqrt_tau.has_value());
  EXPECT_NEAR(records[0].bell_value, kSqrt2, 1e-12);
  EXPECT_TRUE(records[0].violation);
}

TEST(ScanAlpha, RowsAscendAndEmptyGridRejected) {
  const double grid[] = {0.9, 0.1, 0.5};
  const auto records = scan_alpha(3, grid);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_LT(records[0].alpha, records[1].alpha);
  EXPECT_LT(records[1].alpha, records[2].alpha);
  EXPECT_THROW(scan_alpha(4, {}), std::invalid_argument);
}

TEST(ScanAlpha, MonotoneOnTheFirstQuarterPeriod) {
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) {
    grid.push_back(kPi / 4 * k / 40.0);
  }
  const auto records = scan_alpha(4, grid);
  for (std::size_t r = 1; r < records.size(); ++r) {
    EXPECT_GE(*records[r].tau, *records[r - 1].tau - 1e-12);
    EXPECT_GE(records[r].bell_value, records[r - 1].bell_value - 1e-12);
  }
}

TEST(ScanAlpha, TwoSqrtTauTracksBellValue) {
  std::vector<double> grid;
  for (int k = 0; k <= 36; ++k) {
    grid.push_back(kPi / 2 * k / 36.0);
  }
  for (const ScanRecord& record : scan_alpha(4, grid)) {
    ASSERT_TRUE(record.two_sqrt_tau.has_value());
    EXPECT_NEAR(record.bell_value, *record.two_sqrt_tau, 1e-10);
  }
}

TEST(ScanAlpha, ViolationFlipsStrictlyAboveThreshold) {
  for (int n : {3, 4, 5, 6}) {
    const double threshold = violation_threshold(n).this_family;
    std::vector<double> grid;
    for (int k = 0; k <= 200; ++k) {
      grid.push_back(kPi / 2 * k / 200.0);
    }
    // Land exactly on the threshold angle as well.
    grid.push_back(0.5 * std::asin(threshold));
    for (const ScanRecord& record : scan_alpha(n, grid)) {
      const bool strictly_above = record.sin_2alpha > threshold + 1e-9;
      const bool strictly_below = record.sin_2alpha < threshold - 1e-9;
      if (strictly_above) {
        EXPECT_TRUE(record.violation) << "n=" << n << " sin2a=" << record.sin_2alpha;
      } else if (strictly_below) {
        EXPECT_FALSE(record.violation) << "n=" << n << " sin2a=" << record.sin_2alpha;
      }
    }
  }
}

}  // namespace
}  // namespace pairbell
