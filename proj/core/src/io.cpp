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

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pairbell {

namespace {

int parse_power_of_two(const std::string& text) {
  if (text.size() < 3 || text[0] != '2' || text[1] != '^') {
    throw std::invalid_argument("normalization must have the exact form \"2^<int>\", got \"" +
                                text + "\"");
  }
  int exponent = 0;
  const char* begin = text.data() + 2;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, exponent);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("normalization must have the exact form \"2^<int>\", got \"" +
                                text + "\"");
  }
  return exponent;
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

nlohmann::ordered_json expression_to_json(const BellExpression& expr) {
  nlohmann::ordered_json j;
  j["n"] = expr.site_count();
  j["sign"] = expr.sign();
  j["leader"] = expr.leader();
  j["normalization"] = "2^" + std::to_string(expr.normalization_log2());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const CorrelationTerm& term : expr.terms()) {
    nlohmann::ordered_json jt;
    jt["coeff_sign"] = term.coeff_sign;
    jt["choice"] = term.choice;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

BellExpression expression_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("expression JSON must be an object");
  }
  const int n = require_field(j, "n").get<int>();
  const int sign = require_field(j, "sign").get<int>();
  const int leader = require_field(j, "leader").get<int>();
  const int norm_log2 = parse_power_of_two(require_field(j, "normalization").get<std::string>());

  std::vector<CorrelationTerm> terms;
  for (const nlohmann::json& jt : require_field(j, "terms")) {
    CorrelationTerm term;
    term.coeff_sign = require_field(jt, "coeff_sign").get<int>();
    term.choice = require_field(jt, "choice").get<std::vector<std::uint8_t>>();
    terms.push_back(std::move(term));
  }
  return BellExpression::from_parts(n, sign, leader, norm_log2, std::move(terms));
}

nlohmann::ordered_json settings_to_json(const MeasurementSettings& settings) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& site : settings.vectors) {
    j.push_back({site[0], site[1]});
  }
  return j;
}

MeasurementSettings settings_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("settings JSON must be a non-empty array of per-site pairs");
  }
  MeasurementSettings settings;
  settings.site_count = static_cast<int>(j.size());
  for (const nlohmann::json& site : j) {
    if (!site.is_array() || site.size() != 2) {
      throw std::invalid_argument("each settings entry must be a pair of 3-vectors");
    }
    std::array<Vec3, 2> pair;
    for (int k = 0; k < 2; ++k) {
      const nlohmann::json& vec = site[static_cast<std::size_t>(k)];
      if (!vec.is_array() || vec.size() != 3) {
        throw std::invalid_argument("each observable must be a 3-vector");
      }
      for (int c = 0; c < 3; ++c) {
        pair[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] =
            vec[static_cast<std::size_t>(c)].get<double>();
      }
    }
    settings.vectors.push_back(pair);
  }
  validate_settings(settings);
  return settings;
}

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string scan_csv_header() {
  return "alpha,sin_2alpha,tau,bell_value,two_sqrt_tau,threshold_paper,threshold_sg,"
         "violation";
}

std::string scan_csv(int site_count, std::span<const ScanRecord> records) {
  const ViolationThreshold threshold = violation_threshold(site_count);
  std::ostringstream out;
  out << scan_csv_header() << '\n';
  for (const ScanRecord& record : records) {
    out << format_value(record.alpha) << ',' << format_value(record.sin_2alpha) << ',';
    if (record.tau) {
      out << format_value(*record.tau);
    }
    out << ',' << format_value(record.bell_value) << ',';
    if (record.two_sqrt_tau) {
      out << format_value(*record.two_sqrt_tau);
    }
    out << ',' << format_value(threshold.this_family) << ','
        << format_value(threshold.scarani_gisin) << ',' << (record.violation ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace pairbell
