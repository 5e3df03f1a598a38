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

#include <vector>

#include "pa/rational.hpp"

namespace pa::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  Rational value;          // objective at x when kOptimal
  std::vector<Rational> x;
};

// Dense linear program  maximize c.x  subject to  A x <= b.
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  // When false the variables are free; otherwise x >= 0 is implied.
  bool nonnegative = true;
};

// Exact two-phase primal simplex. Bland's rule is used for both the entering
// and the leaving variable, so the method terminates on degenerate problems.
Result solve(const Problem& problem);

}  // namespace pa::lp
