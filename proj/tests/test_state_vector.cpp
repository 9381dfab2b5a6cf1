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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace pairbell {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MakeGhz, AmplitudesAtEnds) {
  const StateVector two = make_ghz(2);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(two[0].real(), r);
  EXPECT_DOUBLE_EQ(two[3].real(), r);
  EXPECT_DOUBLE_EQ(two[1].real(), 0.0);
  EXPECT_DOUBLE_EQ(two[2].real(), 0.0);

  const StateVector four = make_ghz(4);
  EXPECT_DOUBLE_EQ(four[0].real(), r);
  EXPECT_DOUBLE_EQ(four[15].real(), r);
  EXPECT_TRUE(four.is_normalized());
}

TEST(MakeGhz, EqualsBalancedGghz) {
  const StateVector ghz = make_ghz(3);
  const StateVector gghz = make_gghz(3, kPi / 4);
  for (std::size_t b = 0; b < 8; ++b) {
    EXPECT_NEAR(std::abs(ghz[b] - gghz[b]), 0.0, 1e-15);
  }
}

TEST(MakeGghz, TrigAmplitudes) {
  const StateVector zero = make_gghz(4, 0.0);
  EXPECT_DOUBLE_EQ(zero[0].real(), 1.0);
  EXPECT_DOUBLE_EQ(zero[15].real(), 0.0);

  const StateVector tilted = make_gghz(4, kPi / 12);
  EXPECT_NEAR(tilted[0].real(), std::cos(kPi / 12), 1e-15);
  EXPECT_NEAR(tilted[15].real(), std::sin(kPi / 12), 1e-15);
  EXPECT_NEAR(2 * tilted[0].real() * tilted[15].real(), 0.5, 1e-15);  // sin(2a) = 1/2
  EXPECT_TRUE(tilted.is_normalized());
}

TEST(MakeSlice, CollapsesToGghzAndProducts) {
  const StateVector gghz = make_slice(0.3, kPi / 2, kPi / 2, kPi / 2);
  const StateVector reference = make_gghz(4, 0.3);
  for (std::size_t b = 0; b < 16; ++b) {
    EXPECT_NEAR(std::abs(gghz[b] - reference[b]), 0.0, 1e-15) << "b=" << b;
  }

  const StateVector half = make_slice(kPi / 4, kPi / 2, kPi / 2, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(half[0].real(), r, 1e-15);
  EXPECT_NEAR(half[0b1110].real(), r, 1e-15);
  double rest = 0.0;
  for (std::size_t b = 1; b < 16; ++b) {
    if (b != 0b1110) {
      rest += std::abs(half[b]);
    }
  }
  EXPECT_NEAR(rest, 0.0, 1e-14);  // cos(pi/2) is ~6e-17, not exactly zero

  const StateVector product = make_slice(0.0, 0.7, 1.1, 0.2);
  EXPECT_DOUBLE_EQ(product[0].real(), 1.0);
  for (std::size_t b = 1; b < 16; ++b) {
    EXPECT_DOUBLE_EQ(std::abs(product[b]), 0.0);
  }
}

TEST(MakeSlice, NormalizedForArbitraryAngles) {
  EXPECT_TRUE(make_slice(0.31, 1.7, -0.4, 2.9).is_normalized());
}

TEST(StateVector, RejectsBadDimensions) {
  EXPECT_THROW(StateVector(2, std::vector<std::complex<double>>(3)), std::invalid_argument);
  EXPECT_THROW(make_ghz(1), std::invalid_argument);
  EXPECT_THROW(make_ghz(25), std::invalid_argument);
  EXPECT_THROW(make_gghz(30, 0.1), std::invalid_argument);
  EXPECT_NO_THROW(make_ghz(14, 14));
}

}  // namespace
}  // namespace pairbell
