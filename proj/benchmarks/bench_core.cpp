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

#include <benchmark/benchmark.h>

#include "pairbell/bell_expression.hpp"
#include "pairbell/entanglement.hpp"
#include "pairbell/lhv.hpp"
#include "pairbell/quantum.hpp"
#include "pairbell/settings.hpp"
#include "pairbell/state_vector.hpp"

namespace {

using namespace pairbell;

void BM_BuildExpression(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BellExpression::build(n, canonical_sign(n)));
  }
}
BENCHMARK(BM_BuildExpression)->DenseRange(4, 16, 4);

void BM_LhvMaxSingleThread(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BellExpression expr = BellExpression::build(n, canonical_sign(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhv_max(expr, {.threads = 1}));
  }
  state.SetComplexityN(1ll << (2 * n));
}
BENCHMARK(BM_LhvMaxSingleThread)->DenseRange(4, 10, 2)->Complexity();

void BM_LhvScanRange(benchmark::State& state) {
  const BellExpression expr = BellExpression::build(10, canonical_sign(10));
  const std::uint64_t end = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhv_scan_range(expr, 0, end));
  }
}
BENCHMARK(BM_LhvScanRange)->Range(1 << 10, 1 << 18);

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BellExpression expr = BellExpression::build(n, canonical_sign(n));
  const MeasurementSettings settings = canonical_settings(n);
  const StateVector ghz = make_ghz(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(expr, settings, ghz));
  }
}
BENCHMARK(BM_Expectation)->DenseRange(4, 16, 4);

void BM_PauliExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BellExpression expr = BellExpression::build(n, canonical_sign(n));
  const MeasurementSettings settings = canonical_settings(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_pauli_expansion(expr, settings));
  }
}
BENCHMARK(BM_PauliExpansion)->DenseRange(4, 12, 4);

void BM_ApplyStabilizer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum op = ghz_stabilizer(n);
  const StateVector ghz = make_ghz(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_pauli_sum(op, ghz));
  }
}
BENCHMARK(BM_ApplyStabilizer)->DenseRange(4, 12, 2);

void BM_MaxAbsEigenvalue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum op = bell_pauli_expansion(BellExpression::build(n, canonical_sign(n)),
                                           canonical_settings(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_abs_eigenvalue(op));
  }
}
BENCHMARK(BM_MaxAbsEigenvalue)->DenseRange(2, 8, 2);

void BM_NTangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector gghz = make_gghz(n, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(n_tangle(gghz));
  }
}
BENCHMARK(BM_NTangle)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
