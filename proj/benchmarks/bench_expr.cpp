// Copyright 2026 The pa Authors
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

#include "bench_common.hpp"

namespace {

void BM_Negate(benchmark::State& state) {
  std::mt19937_64 gen(7);
  const auto clauses = static_cast<std::size_t>(state.range(0));
  const auto e = pa::bench::random_expr(gen, 2, clauses, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pa::negate(e));
}
BENCHMARK(BM_Negate)->DenseRange(1, 6);

void BM_Eval(benchmark::State& state) {
  std::mt19937_64 gen(8);
  const auto e = pa::bench::random_expr(gen, 3, 6, 4);
  const pa::Point x{pa::Rational(1, 3), pa::Rational(-5, 7), pa::Rational(2)};
  for (auto _ : state) benchmark::DoNotOptimize(pa::eval(e, x));
}
BENCHMARK(BM_Eval);

}  // namespace
