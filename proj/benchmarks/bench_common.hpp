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

#include <cstdint>
#include <random>
#include <vector>

#include "pa/expr.hpp"

namespace pa::bench {

// Deterministic random expressions with small rational coefficients.
inline MinMaxExpr random_expr(std::mt19937_64& gen, std::size_t m, std::size_t clauses,
                              std::size_t per_clause) {
  std::uniform_int_distribution<long> coef(-30, 30);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<MinMaxExpr::Clause> out(clauses);
  for (auto& clause : out) {
    for (std::size_t k = 0; k < per_clause; ++k) {
      AffineFunction f = AffineFunction::constant(m, Rational(coef(gen), den(gen)));
      for (auto& c : f.v) c = Rational(coef(gen), den(gen));
      clause.push_back(std::move(f));
    }
  }
  return MinMaxExpr(m, std::move(out));
}

}  // namespace pa::bench
