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

#include <array>
#include <vector>

namespace pairbell {

using Vec3 = std::array<double, 3>;

/// Two dichotomic observables per site, each given as a unit Bloch vector:
/// observable k at site i is vectors[i-1][k-1] . (sigma_x, sigma_y, sigma_z).
struct MeasurementSettings {
  int site_count = 0;
  std::vector<std::array<Vec3, 2>> vectors;

  bool operator==(const MeasurementSettings&) const = default;
};

/// Throws std::invalid_argument unless every Bloch vector has unit Euclidean
/// norm within `tol` and the vector list matches site_count.
void validate_settings(const MeasurementSettings& settings, double tol = 1e-12);

/// The fixed per-residue-class measurement directions under which the GHZ
/// state attains the constant value sqrt(2) (n = 2 mod 4) or 2 (otherwise):
///   n = 2 mod 4: site 1 gets (1,1,0)/sqrt2 and (-1,1,0)/sqrt2, the rest x/y;
///   n = 0,3 mod 4: every site gets x = (1,0,0) and y = (0,1,0);
///   n = 1 mod 4 (n >= 5): site 1 gets x twice, the rest x/y.
MeasurementSettings canonical_settings(int site_count);

/// The calibrated second-product prefactor s*(n) = (-1)^floor((n+2)/4) for
/// which the GHZ state reaches the constant value under canonical_settings.
int canonical_sign(int site_count);

}  // namespace pairbell
