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

#include "pa/approx.hpp"

namespace {

void BM_KuhnLine(benchmark::State& state) {
  const auto f = pa::make_oracle("quadratic", 1);
  const pa::Rational step(1, state.range(0));
  const auto box = pa::SolidBox::omega(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pa::kuhn_interpolant(f, box, step));
}
BENCHMARK(BM_KuhnLine)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);

void BM_KuhnPlane(benchmark::State& state) {
  const auto f = pa::make_oracle("pyramid", 2);
  const pa::Rational step(1, state.range(0));
  const auto box = pa::SolidBox::omega(2, 1);
  pa::Limits limits;
  limits.hyperplane_limit = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(pa::kuhn_interpolant(f, box, step, limits));
}
BENCHMARK(BM_KuhnPlane)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_UniformApprox(benchmark::State& state) {
  const auto f = pa::make_oracle("min-abs-1", 1);
  pa::ApproxOptions options;
  options.samples = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pa::uniform_approx(f, pa::Rational(1, 4), 2, options));
  }
}
BENCHMARK(BM_UniformApprox)->Unit(benchmark::kMillisecond);

}  // namespace
