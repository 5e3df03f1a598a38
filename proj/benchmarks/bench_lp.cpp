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

#include <random>

#include "pa/lp.hpp"

namespace {

// Random bounded feasible LP: box rows keep it bounded, b >= 0 keeps 0 feasible.
pa::lp::Problem random_problem(std::size_t vars, std::size_t rows, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  pa::lp::Problem p;
  p.nonnegative = false;
  for (std::size_t i = 0; i < vars; ++i) {
    for (const long s : {1L, -1L}) {
      std::vector<pa::Rational> row(vars);
      row[i] = s;
      p.a.push_back(std::move(row));
      p.b.push_back(10);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<pa::Rational> row(vars);
    for (auto& c : row) c = pa::Rational(coef(gen), 1 + (coef(gen) + 9) % 3);
    p.a.push_back(std::move(row));
    p.b.push_back(pa::Rational(1 + (coef(gen) + 9), 2));
  }
  p.c.resize(vars);
  for (auto& c : p.c) c = coef(gen);
  return p;
}

void BM_Simplex(benchmark::State& state) {
  const auto p = random_problem(static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(pa::lp::solve(p));
}
BENCHMARK(BM_Simplex)->Args({2, 16})->Args({2, 64})->Args({3, 32})->Args({4, 64});

}  // namespace
