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
#include <vector>

namespace pairbell {

/// One full-correlation monomial. Every site selects observable 1 or 2; the
/// numeric coefficient is coeff_sign times the parent expression's
/// normalization, so integer arithmetic stays exact until the final scaling.
struct CorrelationTerm {
  int coeff_sign = 1;                // +1 or -1
  std::vector<std::uint8_t> choice;  // choice[i] in {1,2}: observable at site i+1

  bool operator==(const CorrelationTerm&) const = default;
};

/// A normalized sum of full-correlation terms assembled from paired CHSH
/// partitions.
///
/// Even n:
///   2^{-n/2} [ prod_pairs (A1 A1 - A2 A2) + sign * prod_pairs (A1 A2 + A2 A1) ]
/// with adjacent ascending pairs (1,2),(3,4),...,(n-1,n). Odd n: the leader
/// site contributes the lone factor A_1 to the first product and A_2 to the
/// second, the remaining sites pair up in ascending adjacent order, and the
/// normalization is 2^{-(n-1)/2}.
///
/// Canonical term order: every first-product ("minus-partition") term before
/// every second-product ("plus-partition") term, each family sorted
/// lexicographically by its choice vector.
class BellExpression {
 public:
  /// Expands the paired-partition polynomial for `site_count` sites.
  /// `sign` (+1 or -1) is the prefactor of the second product; `leader` is the
  /// unpaired site for odd `site_count` and ignored for even `site_count`.
  static BellExpression build(int site_count, int sign, int leader = 1);

  /// Assembles an expression from explicit parts (e.g. parsed from JSON).
  /// Validates elementary invariants only; the result need not have the
  /// paired-partition structure.
  static BellExpression from_parts(int site_count, int sign, int leader,
                                   int normalization_log2,
                                   std::vector<CorrelationTerm> terms);

  int site_count() const { return site_count_; }
  int sign() const { return sign_; }
  int leader() const { return leader_; }

  /// The normalization is exactly 2^{normalization_log2()}.
  int normalization_log2() const { return norm_log2_; }
  double normalization() const;

  const std::vector<CorrelationTerm>& terms() const { return terms_; }

  bool operator==(const BellExpression&) const = default;

 private:
  BellExpression() = default;

  int site_count_ = 0;
  int sign_ = 1;
  int leader_ = 1;
  int norm_log2_ = 0;
  std::vector<CorrelationTerm> terms_;
};

/// Number of terms of the paired-partition expression on `site_count` sites:
/// 2^{(n+1)/2} for odd n, 2^{n/2+1} for even n.
std::uint64_t term_count(int site_count);

}  // namespace pairbell
