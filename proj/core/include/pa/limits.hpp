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

#pragma once

#include <cstddef>

namespace pa {

// Size budgets guarding the exponential corners of the engine.
struct Limits {
  // Clauses produced by one distributive expansion in negate().
  std::size_t clause_budget = 1'000'000;
  // Distinct hyperplanes cutting a box during cell enumeration.
  std::size_t hyperplane_limit = 64;
  // Grid vertices sampled per box by the Kuhn interpolant.
  std::size_t grid_budget = 1'000'000;
};

}  // namespace pa
