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
#include <cstdint>
#include <utility>
#include <vector>

#include "pairbell/bell_expression.hpp"

namespace pairbell {

/// A deterministic local strategy: one +-1 outcome preassigned to each of the
/// 2n observables. Strategies are indexed in [0, 4^n) with two bits per site;
/// site 1 owns the most significant bit pair, and within a pair the high bit
/// encodes observable 1. Bit set means outcome -1.
struct DeterministicStrategy {
  int site_count = 0;
  std::vector<std::array<int, 2>> outcomes;  // outcomes[i][k] = +-1 for observable k+1 at site i+1

  static DeterministicStrategy from_index(int site_count, std::uint64_t index);
  std::uint64_t index() const;

  bool operator==(const DeterministicStrategy&) const = default;
};

/// Bit position of (site, observable) within a strategy index; sites and
/// observables are 1-based. Shared by the encoding and the enumeration kernel.
int strategy_bit(int site_count, int site, int observable);

/// Exact integer part of the classical value: sum over terms of
/// coeff_sign * prod_i outcomes[i][choice[i]]. The real value is
/// lhv_numerator * expr.normalization().
long long lhv_numerator(const BellExpression& expr, const DeterministicStrategy& strategy);

double lhv_value(const BellExpression& expr, const DeterministicStrategy& strategy);

/// The two CHSH partitions of one pair under +-1 outcomes:
///   p_minus = a1*b1 - a2*b2,  p_plus = a1*b2 + a2*b1.
/// Each lies in {-2, 0, 2} and exactly one of the two is zero.
std::pair<int, int> partition_values(int a1, int a2, int b1, int b2);

struct LhvBoundResult {
  double max_value = 0.0;
  long long max_numerator = 0;  // max_value = max_numerator * normalization
  DeterministicStrategy witness;
  std::uint64_t witness_index = 0;
  bool exhaustive = false;
  std::uint64_t strategies_evaluated = 0;
};

struct LhvMaxOptions {
  int enumeration_cap = 12;  // refuse exhaustive runs above this site count
  unsigned threads = 0;      // 0: hardware concurrency
};

/// Exact maximum of |lhv_value| over all 4^n deterministic strategies, with
/// the lowest-index maximizing witness. Integer arithmetic throughout; the
/// index space is split into contiguous ranges evaluated in parallel.
LhvBoundResult lhv_max(const BellExpression& expr, const LhvMaxOptions& options = {});

/// Best |lhv_value| over one contiguous index range [begin, end); ties keep
/// the lowest index. Kernel used by lhv_max's shards, exposed for sharding
/// tests.
std::pair<long long, std::uint64_t> lhv_scan_range(const BellExpression& expr,
                                                   std::uint64_t begin,
                                                   std::uint64_t end);

/// Non-exhaustive lower bound from `samples` uniformly drawn strategies.
LhvBoundResult lhv_max_sampled(const BellExpression& expr, std::uint64_t samples,
                               std::uint64_t seed);

/// Returns the bound 1 for expressions with the paired-partition structure:
/// per pair exactly one partition is nonzero, so at most one of the two
/// products survives and its magnitude cancels the normalization. Throws
/// std::invalid_argument for expressions of unknown structure.
double algebraic_bound(const BellExpression& expr);

}  // namespace pairbell
