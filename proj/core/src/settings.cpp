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

#include "pairbell/settings.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pairbell {

void validate_settings(const MeasurementSettings& settings, double tol) {
  if (settings.site_count < 1 ||
      settings.vectors.size() != static_cast<std::size_t>(settings.site_count)) {
    throw std::invalid_argument("settings: vector list does not match site_count");
  }
  for (std::size_t i = 0; i < settings.vectors.size(); ++i) {
    for (int k = 0; k < 2; ++k) {
      const Vec3& v = settings.vectors[i][static_cast<std::size_t>(k)];
      const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (std::abs(norm - 1.0) > tol) {
        throw std::invalid_argument("settings: observable " + std::to_string(k + 1) +
                                    " at site " + std::to_string(i + 1) +
                                    " is not a unit vector (norm " + std::to_string(norm) +
                                    ")");
      }
    }
  }
}

MeasurementSettings canonical_settings(int site_count) {
  if (site_count < 2) {
    throw std::invalid_argument("canonical_settings: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  const Vec3 x{1.0, 0.0, 0.0};
  const Vec3 y{0.0, 1.0, 0.0};

  MeasurementSettings settings;
  settings.site_count = site_count;
  settings.vectors.assign(static_cast<std::size_t>(site_count), {x, y});

  switch (site_count % 4) {
    case 2: {
      // Site 1 rotated by 45 degrees in the x-y plane.
      const double r = 1.0 / std::sqrt(2.0);
      settings.vectors[0] = {Vec3{r, r, 0.0}, Vec3{-r, r, 0.0}};
      break;
    }
    case 1:
      // n = 5, 9, ...: site 1 measures x in both settings.
      settings.vectors[0] = {x, x};
      break;
    default:
      // n = 0, 3 mod 4: x/y everywhere.
      break;
  }
  return settings;
}

int canonical_sign(int site_count) {
  if (site_count < 2) {
    throw std::invalid_argument("canonical_sign: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  return ((site_count + 2) / 4) % 2 == 0 ? 1 : -1;
}

}  // namespace pairbell
