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
#include "pa/cells.hpp"

namespace {

void BM_BuildComplex(benchmark::State& state) {
  std::mt19937_64 gen(5);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto e = pa::bench::random_expr(gen, m, 3, static_cast<std::size_t>(state.range(1)));
  const auto box = pa::SolidBox::omega(m, 5);
  pa::Limits limits;
  limits.hyperplane_limit = 1024;
  std::size_t cells = 0;
  for (auto _ : state) {
    const auto complex = pa::build_complex(e, box, limits);
    cells = complex.cells.size();
    benchmark::DoNotOptimize(cells);
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_BuildComplex)->Args({1, 4})->Args({2, 2})->Args({2, 3})->Args({3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_SemanticEqual(benchmark::State& state) {
  std::mt19937_64 gen(6);
  const auto e = pa::bench::random_expr(gen, 2, 3, 2);
  const auto box = pa::SolidBox::omega(2, 5);
  pa::Limits limits;
  limits.hyperplane_limit = 1024;
  const auto rebuilt = pa::max_min_from_pairs(pa::build_complex(e, box, limits));
  for (auto _ : state) benchmark::DoNotOptimize(pa::semantic_equal(e, rebuilt, box, limits));
}
BENCHMARK(BM_SemanticEqual)->Unit(benchmark::kMillisecond);

}  // namespace
