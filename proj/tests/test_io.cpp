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

#include "pairbell/io.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "pairbell/settings.hpp"

namespace pairbell {
namespace {

TEST(ExpressionJson, FixedFieldOrderAndExactNormalization) {
  const nlohmann::ordered_json j = expression_to_json(BellExpression::build(2, 1));
  const std::string text = j.dump();
  // Field order is part of the schema.
  EXPECT_EQ(text.find("\"n\""), 1u);
  EXPECT_LT(text.find("\"n\""), text.find("\"sign\""));
  EXPECT_LT(text.find("\"sign\""), text.find("\"leader\""));
  EXPECT_LT(text.find("\"leader\""), text.find("\"normalization\""));
  EXPECT_LT(text.find("\"normalization\""), text.find("\"terms\""));
  EXPECT_EQ(j["normalization"], "2^-1");
  EXPECT_EQ(j["terms"].size(), 4u);
  EXPECT_EQ(j["terms"][0]["coeff_sign"], 1);
  EXPECT_EQ(j["terms"][0]["choice"], (std::vector<int>{1, 1}));
}

TEST(ExpressionJson, RoundTripsExactly) {
  for (int n : {2, 3, 4, 7}) {
    const BellExpression expr = BellExpression::build(n, canonical_sign(n));
    const BellExpression back = expression_from_json(expression_to_json(expr));
    EXPECT_EQ(back, expr) << "n=" << n;
  }
}

TEST(ExpressionJson, RejectsMalformedDocuments) {
  EXPECT_THROW(expression_from_json(nlohmann::json::parse("[1,2]")), std::invalid_argument);
  nlohmann::json missing = expression_to_json(BellExpression::build(2, 1));
  missing.erase("terms");
  EXPECT_THROW(expression_from_json(missing), std::invalid_argument);
  nlohmann::json bad_norm = expression_to_json(BellExpression::build(2, 1));
  bad_norm["normalization"] = "0.5";
  EXPECT_THROW(expression_from_json(bad_norm), std::invalid_argument);
  nlohmann::json bad_choice = expression_to_json(BellExpression::build(2, 1));
  bad_choice["terms"][0]["choice"] = {1, 7};
  EXPECT_THROW(expression_from_json(bad_choice), std::invalid_argument);
}

TEST(SettingsJson, RoundTripsCanonicalSettings) {
  for (int n : {2, 4, 5}) {
    const MeasurementSettings settings = canonical_settings(n);
    EXPECT_EQ(settings_from_json(settings_to_json(settings)), settings);
  }
}

TEST(SettingsJson, RejectsMalformedDocuments) {
  EXPECT_THROW(settings_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
  EXPECT_THROW(settings_from_json(nlohmann::json::parse("[[[1,0,0]]]")),
               std::invalid_argument);
  EXPECT_THROW(settings_from_json(nlohmann::json::parse("[[[1,0],[0,1,0]]]")),
               std::invalid_argument);
  // Unit-norm validation applies on ingestion.
  EXPECT_THROW(settings_from_json(nlohmann::json::parse("[[[1,1,0],[0,1,0]]]")),
               std::invalid_argument);
}

TEST(FormatValue, TwelveSignificantDigits) {
  EXPECT_EQ(format_value(2.0), "2");
  EXPECT_EQ(format_value(std::sqrt(2.0)), "1.41421356237");
  EXPECT_EQ(format_value(std::numbers::pi / 4), "0.785398163397");
}

TEST(ScanCsv, HeaderAndFourSiteRows) {
  const double grid[] = {std::numbers::pi / 12, std::numbers::pi / 4};
  const auto records = scan_alpha(4, grid);
  const std::string csv = scan_csv(4, records);

  std::istringstream lines(csv);
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line,
            "alpha,sin_2alpha,tau,bell_value,two_sqrt_tau,threshold_paper,threshold_sg,"
            "violation");
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_NE(line.find(",0.5,0.25,"), std::string::npos);  // boundary row
  EXPECT_NE(line.find(",0.5,0.353553390593,0"), std::string::npos);  // thresholds + flag
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_NE(line.find(",1,1,2,2,"), std::string::npos);  // maximum row
  EXPECT_NE(line.find(",1"), std::string::npos);
  EXPECT_FALSE(std::getline(lines, line));
}

TEST(ScanCsv, EmptyTangleCellsAwayFromFourSites) {
  const double grid[] = {std::numbers::pi / 4};
  const std::string csv = scan_csv(6, scan_alpha(6, grid));
  std::istringstream lines(csv);
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));  // header
  ASSERT_TRUE(std::getline(lines, line));
  // alpha,sin_2alpha,,bell_value,,thresholds,violation
  EXPECT_NE(line.find(",,1.41421356237,,"), std::string::npos);
  EXPECT_EQ(line.back(), '1');  // sqrt(2) > 1: violation
}

}  // namespace
}  // namespace pairbell
