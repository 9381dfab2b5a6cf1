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

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pairbell/bell_expression.hpp"
#include "pairbell/entanglement.hpp"
#include "pairbell/settings.hpp"

namespace pairbell {

/// Fixed-order schema:
/// { "n", "sign", "leader", "normalization" ("2^-p"), "terms": [{"coeff_sign", "choice"}] }.
nlohmann::ordered_json expression_to_json(const BellExpression& expr);
BellExpression expression_from_json(const nlohmann::json& j);

/// Settings files are a JSON array of per-site pairs of 3-vectors:
/// [[[x,y,z],[x,y,z]], ...].
nlohmann::ordered_json settings_to_json(const MeasurementSettings& settings);
MeasurementSettings settings_from_json(const nlohmann::json& j);

/// `value` rendered with 12 significant digits (the human-output precision).
std::string format_value(double value);

/// Header: alpha,sin_2alpha,tau,bell_value,two_sqrt_tau,threshold_paper,threshold_sg,violation
/// The tau and two_sqrt_tau cells are empty for site counts other than 4;
/// floating cells carry 12 significant digits, violation is 0/1.
std::string scan_csv(int site_count, std::span<const ScanRecord> records);
std::string scan_csv_header();

}  // namespace pairbell
