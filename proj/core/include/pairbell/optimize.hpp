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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pairbell/bell_expression.hpp"
#include "pairbell/settings.hpp"
#include "pairbell/state_vector.hpp"

namespace pairbell {

/// Angle parameterizations of measurement settings.
///   planar: 2n angles theta, a = (cos theta, sin theta, 0);
///   bloch:  4n angles (polar, azimuth) pairs, a = (sin t cos p, sin t sin p, cos t).
enum class SettingsMode { planar, bloch };

std::vector<double> encode_settings(const MeasurementSettings& settings, SettingsMode mode);
MeasurementSettings decode_settings(int site_count, SettingsMode mode,
                                    std::span<const double> angles);

struct SimplexOptions {
  double tolerance = 1e-10;    // on the value spread across the simplex
  int max_evaluations = 50000;
  double initial_step = 0.3;
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free simplex ascent (reflection / expansion / contraction /
/// shrink) from a single start point. Deterministic; never returns a value
/// below f(start).
SimplexResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                   std::span<const double> start,
                                   const SimplexOptions& options = {});

struct OptimizeOptions {
  SettingsMode mode = SettingsMode::planar;
  int restarts = 8;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  SimplexOptions simplex;
};

struct OptimizeResult {
  MeasurementSettings settings;
  double value = 0.0;
  int best_restart = 0;
  int evaluations = 0;  // summed over restarts
};

/// Best expectation of `expr` on `state` over measurement settings, maximized
/// by multi-restart simplex ascent. Restart 0 always starts from the
/// canonical settings, so the result never falls below their value; the
/// remaining restarts draw start angles from the seeded generator. Ties keep
/// the lowest restart index.
OptimizeResult optimize_settings(const BellExpression& expr, const StateVector& state,
                                 const OptimizeOptions& options = {});

/// Evaluates both sign variants of the n-site expression on the GHZ state
/// under canonical settings and returns the winner's sign. The winner must
/// attain sqrt(2) (n = 2 mod 4) or 2 (otherwise) and the loser 0, each within
/// 1e-9; anything else throws std::runtime_error rather than guessing.
int calibrate_sign(int site_count);

}  // namespace pairbell
