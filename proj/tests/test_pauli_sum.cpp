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

#include <gtest/gtest.h>

#include <cmath>

#include "pairbell/state_vector.hpp"

namespace pairbell {
namespace {

std::vector<Pauli> labels(const std::string& text) {
  std::vector<Pauli> out;
  for (char c : text) {
    out.push_back(pauli_from_char(c));
  }
  return out;
}

TEST(ObservableFromBloch, AxisVectors) {
  const PauliSum x = observable_from_bloch({1, 0, 0});
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms()[0].labels, labels("X"));
  EXPECT_DOUBLE_EQ(x.terms()[0].coefficient.real(), 1.0);

  const PauliSum y = observable_from_bloch({0, 1, 0});
  ASSERT_EQ(y.terms().size(), 1u);
  EXPECT_EQ(y.terms()[0].labels, labels("Y"));
}

TEST(ObservableFromBloch, DiagonalVector) {
  const double r = 1.0 / std::sqrt(2.0);
  const PauliSum obs = observable_from_bloch({r, r, 0});
  ASSERT_EQ(obs.terms().size(), 2u);
  EXPECT_EQ(obs.terms()[0].labels, labels("X"));
  EXPECT_DOUBLE_EQ(obs.terms()[0].coefficient.real(), r);
  EXPECT_EQ(obs.terms()[1].labels, labels("Y"));
  EXPECT_DOUBLE_EQ(obs.terms()[1].coefficient.real(), r);
}

TEST(ObservableFromBloch, RejectsNonUnitVector) {
  EXPECT_THROW(observable_from_bloch({1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(observable_from_bloch({0, 0, 0.999}), std::invalid_argument);
}

TEST(ApplyPauliSum, SingleSiteActions) {
  // X on site 1 of |00> gives |10>.
  const StateVector zz(2, {1, 0, 0, 0});
  const PauliSum x1(2, {{1.0, labels("XI")}});
  const StateVector flipped = apply_pauli_sum(x1, zz);
  EXPECT_DOUBLE_EQ(flipped[0b10].real(), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(flipped[0]), 0.0);

  // Y|0> = i|1>, Y|1> = -i|0>.
  const StateVector zero(1, {1, 0});
  const PauliSum y(1, {{1.0, labels("Y")}});
  const StateVector rotated = apply_pauli_sum(y, zero);
  EXPECT_DOUBLE_EQ(rotated[1].imag(), 1.0);
  EXPECT_DOUBLE_EQ(rotated[1].real(), 0.0);
  const StateVector one(1, {0, 1});
  EXPECT_DOUBLE_EQ(apply_pauli_sum(y, one)[0].imag(), -1.0);

  // Z phases the |1> branch.
  const PauliSum z(1, {{1.0, labels("Z")}});
  EXPECT_DOUBLE_EQ(apply_pauli_sum(z, one)[1].real(), -1.0);
  EXPECT_DOUBLE_EQ(apply_pauli_sum(z, zero)[0].real(), 1.0);
}

TEST(ApplyPauliSum, FourQubitOperatorFixesGhz) {
  // (XXXX + YYYY - all six XXYY permutations)/4 maps GHZ_4 to 2 GHZ_4.
  std::vector<PauliTerm> terms{
      {0.25, labels("XXXX")},  {0.25, labels("YYYY")},  {-0.25, labels("XXYY")},
      {-0.25, labels("XYXY")}, {-0.25, labels("XYYX")}, {-0.25, labels("YXXY")},
      {-0.25, labels("YXYX")}, {-0.25, labels("YYXX")},
  };
  const PauliSum op(4, std::move(terms));
  const StateVector ghz = make_ghz(4);
  const StateVector image = apply_pauli_sum(op, ghz);
  for (std::size_t b = 0; b < 16; ++b) {
    EXPECT_NEAR(std::abs(image[b] - 2.0 * ghz[b]), 0.0, 1e-14) << "b=" << b;
  }
}

TEST(ApplyPauliSum, RejectsDimensionMismatch) {
  const PauliSum x1(2, {{1.0, labels("XI")}});
  EXPECT_THROW(apply_pauli_sum(x1, make_ghz(3)), std::invalid_argument);
  EXPECT_THROW(PauliSum(2, {{1.0, labels("XXX")}}), std::invalid_argument);
}

TEST(PauliSum, MergeCombinesDuplicatesAndDropsZeros) {
  const PauliSum sum(1, {{1.0, labels("X")},
                         {1.0, labels("X")},
                         {std::complex<double>(0, 1), labels("Y")},
                         {std::complex<double>(0, -1), labels("Y")}});
  const PauliSum canonical = sum.merged();
  ASSERT_EQ(canonical.terms().size(), 1u);
  EXPECT_EQ(canonical.terms()[0].labels, labels("X"));
  EXPECT_DOUBLE_EQ(canonical.terms()[0].coefficient.real(), 2.0);
}

TEST(PauliSum, HermiticityIsRealCoefficientsAfterMerge) {
  EXPECT_TRUE(PauliSum(2, {{0.5, labels("XY")}, {-2.0, labels("ZZ")}}).is_hermitian());
  EXPECT_FALSE(PauliSum(2, {{std::complex<double>(0, 0.5), labels("XY")}}).is_hermitian());
  // Imaginary parts that cancel in the merge are fine.
  EXPECT_TRUE(PauliSum(1, {{std::complex<double>(1, 0.5), labels("X")},
                           {std::complex<double>(1, -0.5), labels("X")}})
                  .is_hermitian());
}

TEST(PauliSum, L1NormSumsMergedMagnitudes) {
  const PauliSum sum(2, {{0.5, labels("XX")}, {0.5, labels("XX")}, {-1.0, labels("YY")}});
  EXPECT_DOUBLE_EQ(sum.coefficient_l1_norm(), 2.0);
}

TEST(PauliSum, PrintsReadableTerms) {
  const PauliSum sum(2, {{0.25, labels("XY")}, {std::complex<double>(0, -1), labels("ZI")}});
  EXPECT_EQ(sum.str(), "(0.25) XY + (0-1i) ZI");
  EXPECT_EQ(PauliSum(1, {}).str(), "0");
}

}  // namespace
}  // namespace pairbell
