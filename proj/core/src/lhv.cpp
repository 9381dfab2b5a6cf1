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

#include "pairbell/lhv.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace pairbell {

namespace {

void check_site_count_indexable(int site_count) {
  if (site_count < 1 || site_count > 31) {
    throw std::invalid_argument("strategy index space 4^" + std::to_string(site_count) +
                                " does not fit the encoding");
  }
}

std::uint64_t strategy_space(int site_count) { return std::uint64_t{1} << (2 * site_count); }

// Per-term bitmask over the strategy index: one bit per site, selecting the
// chosen observable's bit. The term's product of outcomes is then
// (-1)^popcount(index & mask).
struct TermMask {
  std::uint64_t mask = 0;
  int sign = 1;
};

std::vector<TermMask> term_masks(const BellExpression& expr) {
  const int n = expr.site_count();
  std::vector<TermMask> masks;
  masks.reserve(expr.terms().size());
  for (const CorrelationTerm& term : expr.terms()) {
    TermMask tm;
    tm.sign = term.coeff_sign;
    for (int site = 1; site <= n; ++site) {
      const int observable = term.choice[static_cast<std::size_t>(site - 1)];
      tm.mask |= std::uint64_t{1} << strategy_bit(n, site, observable);
    }
    masks.push_back(tm);
  }
  return masks;
}

long long numerator_from_masks(const std::vector<TermMask>& masks, std::uint64_t index) {
  long long acc = 0;
  for (const TermMask& tm : masks) {
    acc += (std::popcount(index & tm.mask) & 1) ? -tm.sign : tm.sign;
  }
  return acc;
}

struct RangeBest {
  long long best_abs = -1;
  std::uint64_t best_index = 0;
};

RangeBest scan_with_masks(const std::vector<TermMask>& masks, std::uint64_t begin,
                          std::uint64_t end) {
  RangeBest best;
  for (std::uint64_t index = begin; index < end; ++index) {
    const long long value = std::llabs(numerator_from_masks(masks, index));
    if (value > best.best_abs) {
      best.best_abs = value;
      best.best_index = index;
    }
  }
  return best;
}

}  // namespace

int strategy_bit(int site_count, int site, int observable) {
  // Site 1 owns the most significant bit pair; within a pair the high bit is
  // observable 1.
  return 2 * (site_count - site) + (observable == 1 ? 1 : 0);
}

DeterministicStrategy DeterministicStrategy::from_index(int site_count, std::uint64_t index) {
  check_site_count_indexable(site_count);
  if (index >= strategy_space(site_count)) {
    throw std::invalid_argument("strategy index " + std::to_string(index) +
                                " out of range [0, 4^" + std::to_string(site_count) + ")");
  }
  DeterministicStrategy strategy;
  strategy.site_count = site_count;
  strategy.outcomes.resize(static_cast<std::size_t>(site_count));
  for (int site = 1; site <= site_count; ++site) {
    for (int observable = 1; observable <= 2; ++observable) {
      const int bit = strategy_bit(site_count, site, observable);
      strategy.outcomes[static_cast<std::size_t>(site - 1)][static_cast<std::size_t>(
          observable - 1)] = (index >> bit) & 1 ? -1 : 1;
    }
  }
  return strategy;
}

std::uint64_t DeterministicStrategy::index() const {
  check_site_count_indexable(site_count);
  std::uint64_t index = 0;
  for (int site = 1; site <= site_count; ++site) {
    for (int observable = 1; observable <= 2; ++observable) {
      const int outcome = outcomes[static_cast<std::size_t>(site - 1)]
                                  [static_cast<std::size_t>(observable - 1)];
      if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("strategy outcomes must be +1 or -1");
      }
      if (outcome == -1) {
        index |= std::uint64_t{1} << strategy_bit(site_count, site, observable);
      }
    }
  }
  return index;
}

long long lhv_numerator(const BellExpression& expr, const DeterministicStrategy& strategy) {
  if (strategy.site_count != expr.site_count()) {
    throw std::invalid_argument("lhv_value: strategy has " +
                                std::to_string(strategy.site_count) + " sites, expression " +
                                std::to_string(expr.site_count()));
  }
  long long acc = 0;
  for (const CorrelationTerm& term : expr.terms()) {
    int product = term.coeff_sign;
    for (int site = 0; site < expr.site_count(); ++site) {
      const int observable = term.choice[static_cast<std::size_t>(site)];
      product *= strategy.outcomes[static_cast<std::size_t>(site)]
                                  [static_cast<std::size_t>(observable - 1)];
    }
    acc += product;
  }
  return acc;
}

double lhv_value(const BellExpression& expr, const DeterministicStrategy& strategy) {
  return static_cast<double>(lhv_numerator(expr, strategy)) * expr.normalization();
}

std::pair<int, int> partition_values(int a1, int a2, int b1, int b2) {
  for (int v : {a1, a2, b1, b2}) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("partition_values: outcomes must be +1 or -1, got " +
                                  std::to_string(v));
    }
  }
  return {a1 * b1 - a2 * b2, a1 * b2 + a2 * b1};
}

std::pair<long long, std::uint64_t> lhv_scan_range(const BellExpression& expr,
                                                   std::uint64_t begin, std::uint64_t end) {
  check_site_count_indexable(expr.site_count());
  const std::uint64_t space = strategy_space(expr.site_count());
  if (begin > end || end > space) {
    throw std::invalid_argument("lhv_scan_range: bad range");
  }
  const RangeBest best = scan_with_masks(term_masks(expr), begin, end);
  return {best.best_abs, best.best_index};
}

LhvBoundResult lhv_max(const BellExpression& expr, const LhvMaxOptions& options) {
  const int n = expr.site_count();
  check_site_count_indexable(n);
  if (n > options.enumeration_cap) {
    throw std::invalid_argument(
        "lhv_max: " + std::to_string(n) + " sites exceed the enumeration cap " +
        std::to_string(options.enumeration_cap) +
        " (4^n strategies); raise the cap or use lhv_max_sampled");
  }

  const std::uint64_t space = strategy_space(n);
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, space));

  const std::vector<TermMask> masks = term_masks(expr);
  std::vector<RangeBest> bests(threads);
  if (threads == 1) {
    bests[0] = scan_with_masks(masks, 0, space);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = (space + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min<std::uint64_t>(space, t * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(space, begin + chunk);
      workers.emplace_back(
          [&masks, &bests, t, begin, end] { bests[t] = scan_with_masks(masks, begin, end); });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }

  // Ranges are in index order, so a strict comparison keeps the lowest
  // maximizing index.
  RangeBest best;
  for (const RangeBest& candidate : bests) {
    if (candidate.best_abs > best.best_abs) {
      best = candidate;
    }
  }

  LhvBoundResult result;
  result.max_numerator = best.best_abs;
  result.max_value = static_cast<double>(best.best_abs) * expr.normalization();
  result.witness_index = best.best_index;
  result.witness = DeterministicStrategy::from_index(n, best.best_index);
  result.exhaustive = true;
  result.strategies_evaluated = space;
  return result;
}

LhvBoundResult lhv_max_sampled(const BellExpression& expr, std::uint64_t samples,
                               std::uint64_t seed) {
  const int n = expr.site_count();
  check_site_count_indexable(n);
  if (samples == 0) {
    throw std::invalid_argument("lhv_max_sampled: need at least one sample");
  }

  const std::vector<TermMask> masks = term_masks(expr);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, strategy_space(n) - 1);

  RangeBest best;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t index = draw(rng);
    const long long value = std::llabs(numerator_from_masks(masks, index));
    if (value > best.best_abs || (value == best.best_abs && index < best.best_index)) {
      best.best_abs = value;
      best.best_index = index;
    }
  }

  LhvBoundResult result;
  result.max_numerator = best.best_abs;
  result.max_value = static_cast<double>(best.best_abs) * expr.normalization();
  result.witness_index = best.best_index;
  result.witness = DeterministicStrategy::from_index(n, best.best_index);
  result.exhaustive = false;
  result.strategies_evaluated = samples;
  return result;
}

double algebraic_bound(const BellExpression& expr) {
  BellExpression reference = [&] {
    try {
      return BellExpression::build(expr.site_count(), expr.sign(), expr.leader());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(
          "algebraic_bound: structure unknown (not a paired-partition expression)");
    }
  }();

  auto sorted_terms = [](const BellExpression& e) {
    std::vector<CorrelationTerm> terms = e.terms();
    std::sort(terms.begin(), terms.end(),
              [](const CorrelationTerm& a, const CorrelationTerm& b) {
                return std::tie(a.choice, a.coeff_sign) < std::tie(b.choice, b.coeff_sign);
              });
    return terms;
  };

  if (expr.normalization_log2() != reference.normalization_log2() ||
      sorted_terms(expr) != sorted_terms(reference)) {
    throw std::invalid_argument(
        "algebraic_bound: structure unknown (not a paired-partition expression)");
  }

  // Per pair exactly one CHSH partition is nonzero, so at most one product
  // survives; its magnitude 2^{pairs} cancels the normalization.
  return 1.0;
}

}  // namespace pairbell
