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

#include "pairbell/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "pairbell/quantum.hpp"

namespace pairbell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vertex {
  std::vector<double> point;
  double value = 0.0;  // objective being maximized
};

}  // namespace

std::vector<double> encode_settings(const MeasurementSettings& settings, SettingsMode mode) {
  validate_settings(settings);
  std::vector<double> angles;
  for (const auto& site : settings.vectors) {
    for (const Vec3& v : site) {
      if (mode == SettingsMode::planar) {
        if (std::abs(v[2]) > 1e-9) {
          throw std::invalid_argument(
              "encode_settings: planar mode requires x-y plane vectors, got z = " +
              std::to_string(v[2]));
        }
        angles.push_back(std::atan2(v[1], v[0]));
      } else {
        angles.push_back(std::acos(std::clamp(v[2], -1.0, 1.0)));
        angles.push_back(std::atan2(v[1], v[0]));
      }
    }
  }
  return angles;
}

MeasurementSettings decode_settings(int site_count, SettingsMode mode,
                                    std::span<const double> angles) {
  const std::size_t per_site = mode == SettingsMode::planar ? 2 : 4;
  if (site_count < 1 || angles.size() != per_site * static_cast<std::size_t>(site_count)) {
    throw std::invalid_argument("decode_settings: expected " + std::to_string(per_site) +
                                " angles per site");
  }
  MeasurementSettings settings;
  settings.site_count = site_count;
  settings.vectors.resize(static_cast<std::size_t>(site_count));
  for (int site = 0; site < site_count; ++site) {
    for (int k = 0; k < 2; ++k) {
      Vec3 v;
      if (mode == SettingsMode::planar) {
        const double theta = angles[per_site * static_cast<std::size_t>(site) +
                                    static_cast<std::size_t>(k)];
        v = {std::cos(theta), std::sin(theta), 0.0};
      } else {
        const double polar = angles[per_site * static_cast<std::size_t>(site) +
                                    2 * static_cast<std::size_t>(k)];
        const double azimuth = angles[per_site * static_cast<std::size_t>(site) +
                                      2 * static_cast<std::size_t>(k) + 1];
        v = {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
             std::cos(polar)};
      }
      settings.vectors[static_cast<std::size_t>(site)][static_cast<std::size_t>(k)] = v;
    }
  }
  return settings;
}

SimplexResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                   std::span<const double> start,
                                   const SimplexOptions& options) {
  if (start.empty()) {
    throw std::invalid_argument("nelder_mead_maximize: empty start point");
  }
  const std::size_t dim = start.size();
  int evaluations = 0;
  auto evaluate = [&](const std::vector<double>& point) {
    ++evaluations;
    return f(point);
  };

  std::vector<Vertex> simplex(dim + 1);
  simplex[0].point.assign(start.begin(), start.end());
  simplex[0].value = evaluate(simplex[0].point);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1].point = simplex[0].point;
    simplex[i + 1].point[i] += options.initial_step;
    simplex[i + 1].value = evaluate(simplex[i + 1].point);
  }

  auto by_value_desc = [](const Vertex& a, const Vertex& b) { return a.value > b.value; };
  std::sort(simplex.begin(), simplex.end(), by_value_desc);

  while (evaluations < options.max_evaluations &&
         simplex.front().value - simplex.back().value >= options.tolerance) {
    // Centroid of all but the worst vertex.
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        centroid[j] += simplex[i].point[j] / static_cast<double>(dim);
      }
    }
    const Vertex& worst = simplex.back();

    auto blend = [&](double factor) {
      std::vector<double> point(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        point[j] = centroid[j] + factor * (centroid[j] - worst.point[j]);
      }
      return point;
    };

    Vertex reflected{blend(1.0), 0.0};
    reflected.value = evaluate(reflected.point);

    if (reflected.value > simplex.front().value) {
      Vertex expanded{blend(2.0), 0.0};
      expanded.value = evaluate(expanded.point);
      simplex.back() = expanded.value > reflected.value ? std::move(expanded)
                                                        : std::move(reflected);
    } else if (reflected.value > simplex[dim - 1].value) {
      simplex.back() = std::move(reflected);
    } else {
      Vertex contracted{blend(-0.5), 0.0};
      contracted.value = evaluate(contracted.point);
      if (contracted.value > worst.value) {
        simplex.back() = std::move(contracted);
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            simplex[i].point[j] =
                simplex[0].point[j] + 0.5 * (simplex[i].point[j] - simplex[0].point[j]);
          }
          simplex[i].value = evaluate(simplex[i].point);
        }
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_value_desc);
  }

  return SimplexResult{std::move(simplex.front().point), simplex.front().value, evaluations};
}

OptimizeResult optimize_settings(const BellExpression& expr, const StateVector& state,
                                 const OptimizeOptions& options) {
  if (expr.site_count() != state.qubit_count()) {
    throw std::invalid_argument("optimize_settings: expression on " +
                                std::to_string(expr.site_count()) + " sites, state on " +
                                std::to_string(state.qubit_count()) + " qubits");
  }
  if (options.restarts < 1) {
    throw std::invalid_argument("optimize_settings: restarts must be >= 1");
  }
  const int n = expr.site_count();
  const std::size_t per_site = options.mode == SettingsMode::planar ? 2 : 4;
  const std::size_t dim = per_site * static_cast<std::size_t>(n);

  // All start points are drawn up front so the result does not depend on
  // execution order. Restart 0 is always the canonical settings.
  std::vector<std::vector<double>> starts;
  starts.reserve(static_cast<std::size_t>(options.restarts));
  starts.push_back(encode_settings(canonical_settings(n), options.mode));
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> azimuth(0.0, kTwoPi);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  for (int r = 1; r < options.restarts; ++r) {
    std::vector<double> start(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const bool is_polar = options.mode == SettingsMode::bloch && j % 2 == 0;
      start[j] = is_polar ? polar(rng) : azimuth(rng);
    }
    starts.push_back(std::move(start));
  }

  auto objective = [&](std::span<const double> angles) {
    return expectation(expr, decode_settings(n, options.mode, angles), state);
  };

  std::vector<SimplexResult> results(starts.size());
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads != 0
                                          ? options.threads
                                          : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(starts.size())));
  if (threads == 1) {
    for (std::size_t r = 0; r < starts.size(); ++r) {
      results[r] = nelder_mead_maximize(objective, starts[r], options.simplex);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t r = next.fetch_add(1); r < starts.size(); r = next.fetch_add(1)) {
          results[r] = nelder_mead_maximize(objective, starts[r], options.simplex);
        }
      });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }

  std::size_t best = 0;
  int total_evaluations = 0;
  for (std::size_t r = 0; r < results.size(); ++r) {
    total_evaluations += results[r].evaluations;
    if (results[r].value > results[best].value) {
      best = r;
    }
  }

  OptimizeResult out;
  out.settings = decode_settings(n, options.mode, results[best].point);
  out.value = results[best].value;
  out.best_restart = static_cast<int>(best);
  out.evaluations = total_evaluations;
  return out;
}

int calibrate_sign(int site_count) {
  const MeasurementSettings settings = canonical_settings(site_count);
  const StateVector ghz = make_ghz(site_count);
  const double plus = expectation(BellExpression::build(site_count, 1), settings, ghz);
  const double minus = expectation(BellExpression::build(site_count, -1), settings, ghz);

  const int winner = plus >= minus ? 1 : -1;
  const double won = std::max(plus, minus);
  const double lost = std::min(plus, minus);
  const double target = site_count % 4 == 2 ? std::sqrt(2.0) : 2.0;
  if (std::abs(won - target) > 1e-9 || std::abs(lost) > 1e-9) {
    throw std::runtime_error(
        "calibrate_sign: ambiguous outcome at n = " + std::to_string(site_count) +
        " (values " + std::to_string(plus) + " / " + std::to_string(minus) +
        ", expected " + std::to_string(target) + " and 0)");
  }
  return winner;
}

}  // namespace pairbell
