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
#include <vector>

#include "pa/affine.hpp"
#include "pa/limits.hpp"

namespace pa {

// A piecewise affine function in max-of-mins normal form:
//   x -> max over clauses C of (min over f in C of f(x)).
// Clauses and members are deduplicated on construction, keeping the first
// occurrence, so clause order follows the order the caller supplied.
class MinMaxExpr {
 public:
  using Clause = std::vector<AffineFunction>;

  MinMaxExpr(std::size_t dim, std::vector<Clause> clauses);

  static MinMaxExpr from_affine(AffineFunction f);
  static MinMaxExpr constant(std::size_t dim, Rational value);

  std::size_t dim() const { return dim_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t member_count() const;

  friend bool operator==(const MinMaxExpr&, const MinMaxExpr&) = default;

 private:
  std::size_t dim_;
  std::vector<Clause> clauses_;
};

MinMaxExpr from_affine(AffineFunction f);

Rational eval(const MinMaxExpr& e, const Point& x);

// Pointwise max: clause concatenation.
MinMaxExpr join(const MinMaxExpr& e1, const MinMaxExpr& e2);
// Pointwise min: pairwise clause unions (distributivity).
MinMaxExpr meet(const MinMaxExpr& e1, const MinMaxExpr& e2);
// Pointwise sum: pairwise clause sums.
MinMaxExpr add(const MinMaxExpr& e1, const MinMaxExpr& e2);

// Pointwise negation. -max(min ...) is expanded back into max-of-mins one
// clause at a time; between steps, members dominated on all of R^m and
// absorbed clauses are dropped. Throws kExpressionTooLarge when a step would
// produce more than limits.clause_budget clauses.
MinMaxExpr negate(const MinMaxExpr& e, const Limits& limits = {});
MinMaxExpr scale(const MinMaxExpr& e, const Rational& lambda, const Limits& limits = {});

// Removes members and clauses that never attain the min / max on `box`.
// The result agrees with `e` on `box` and may differ outside it.
MinMaxExpr prune(const MinMaxExpr& e, const SolidBox& box);

// Exact equality of e1 and e2 on every point of `box`.
bool semantic_equal(const MinMaxExpr& e1, const MinMaxExpr& e2, const SolidBox& box,
                    const Limits& limits = {});

}  // namespace pa
