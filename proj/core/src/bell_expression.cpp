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

#include "pairbell/bell_expression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pairbell {

std::uint64_t term_count(int site_count) {
  if (site_count < 2) {
    throw std::invalid_argument("term_count: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  const int exponent =
      site_count % 2 != 0 ? (site_count + 1) / 2 : site_count / 2 + 1;
  if (exponent >= 64) {
    throw std::invalid_argument("term_count: 2^" + std::to_string(exponent) +
                                " overflows a 64-bit count");
  }
  return std::uint64_t{1} << exponent;
}

double BellExpression::normalization() const { return std::ldexp(1.0, norm_log2_); }

BellExpression BellExpression::build(int site_count, int sign, int leader) {
  if (site_count < 2) {
    throw std::invalid_argument("build: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("build: sign must be +1 or -1, got " +
                                std::to_string(sign));
  }
  const bool odd = site_count % 2 != 0;
  if (odd && (leader < 1 || leader > site_count)) {
    throw std::invalid_argument("build: leader " + std::to_string(leader) +
                                " out of range [1, " + std::to_string(site_count) + "]");
  }
  if (!odd) {
    leader = 1;
  }

  // Remaining sites pair up in ascending adjacent order.
  std::vector<std::pair<int, int>> pairs;
  {
    std::vector<int> unpaired;
    for (int s = 0; s < site_count; ++s) {
      if (!(odd && s == leader - 1)) {
        unpaired.push_back(s);
      }
    }
    for (std::size_t i = 0; i + 1 < unpaired.size(); i += 2) {
      pairs.emplace_back(unpaired[i], unpaired[i + 1]);
    }
  }
  const int pair_count = static_cast<int>(pairs.size());

  // Family 0 expands prod (A1 A1 - A2 A2), family 1 expands
  // sign * prod (A1 A2 + A2 A1). Enumerating pair selections with the
  // lowest-numbered pair as the most significant position yields the
  // lexicographic term order within each family.
  std::vector<CorrelationTerm> terms;
  terms.reserve(std::size_t{2} << pair_count);
  for (int family = 0; family < 2; ++family) {
    for (std::uint64_t selection = 0; selection < (std::uint64_t{1} << pair_count);
         ++selection) {
      CorrelationTerm term;
      term.choice.assign(static_cast<std::size_t>(site_count), 0);
      int coeff = family == 0 ? 1 : sign;
      if (odd) {
        term.choice[static_cast<std::size_t>(leader - 1)] = family == 0 ? 1 : 2;
      }
      for (int j = 0; j < pair_count; ++j) {
        const bool alternate = (selection >> (pair_count - 1 - j)) & 1;
        const auto [a, b] = pairs[static_cast<std::size_t>(j)];
        if (family == 0) {
          term.choice[static_cast<std::size_t>(a)] = alternate ? 2 : 1;
          term.choice[static_cast<std::size_t>(b)] = alternate ? 2 : 1;
          if (alternate) {
            coeff = -coeff;
          }
        } else {
          term.choice[static_cast<std::size_t>(a)] = alternate ? 2 : 1;
          term.choice[static_cast<std::size_t>(b)] = alternate ? 1 : 2;
        }
      }
      term.coeff_sign = coeff;
      terms.push_back(std::move(term));
    }
  }

  BellExpression expr;
  expr.site_count_ = site_count;
  expr.sign_ = sign;
  expr.leader_ = leader;
  expr.norm_log2_ = -pair_count;
  expr.terms_ = std::move(terms);
  return expr;
}

BellExpression BellExpression::from_parts(int site_count, int sign, int leader,
                                          int normalization_log2,
                                          std::vector<CorrelationTerm> terms) {
  if (site_count < 2) {
    throw std::invalid_argument("from_parts: site_count must be >= 2, got " +
                                std::to_string(site_count));
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("from_parts: sign must be +1 or -1");
  }
  if (leader < 1 || leader > site_count) {
    throw std::invalid_argument("from_parts: leader " + std::to_string(leader) +
                                " out of range [1, " + std::to_string(site_count) + "]");
  }
  if (terms.empty()) {
    throw std::invalid_argument("from_parts: empty term list");
  }
  for (const CorrelationTerm& term : terms) {
    if (term.coeff_sign != 1 && term.coeff_sign != -1) {
      throw std::invalid_argument("from_parts: coeff_sign must be +1 or -1");
    }
    if (term.choice.size() != static_cast<std::size_t>(site_count)) {
      throw std::invalid_argument("from_parts: term choice must have one entry per site");
    }
    for (std::uint8_t c : term.choice) {
      if (c != 1 && c != 2) {
        throw std::invalid_argument("from_parts: choice entries must be 1 or 2");
      }
    }
  }

  BellExpression expr;
  expr.site_count_ = site_count;
  expr.sign_ = sign;
  expr.leader_ = leader;
  expr.norm_log2_ = normalization_log2;
  expr.terms_ = std::move(terms);
  return expr;
}

}  // namespace pairbell
