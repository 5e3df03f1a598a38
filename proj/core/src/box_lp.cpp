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

#include "box_lp.hpp"

#include <utility>

#include "pa/errors.hpp"
#include "pa/lp.hpp"

namespace pa::detail {
namespace {

// Intervals are cheap enough to solve directly.
std::optional<Optimum> maximize_1d(const AffineFunction& objective,
                                   std::span<const AffineFunction> constraints,
                                   const Bounds& bounds) {
  Rational lo = bounds.lo[0];
  Rational hi = bounds.hi[0];
  for (const auto& g : constraints) {
    const Rational& a = g.v[0];
    if (a.is_zero()) {
      if (g.b.sign() < 0) return std::nullopt;
      continue;
    }
    Rational root = -g.b / a;
    if (a.sign() > 0) {
      if (root > lo) lo = std::move(root);
    } else if (root < hi) {
      hi = std::move(root);
    }
  }
  if (lo > hi) return std::nullopt;
  Point x{objective.v[0].sign() >= 0 ? hi : lo};
  Rational value = eval_affine(objective, x);
  return Optimum{std::move(value), std::move(x)};
}

}  // namespace

Bounds Bounds::of(const SolidBox& box) {
  Bounds b;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    b.lo.push_back(box.lower(i));
    b.hi.push_back(box.upper(i));
  }
  return b;
}

std::optional<Optimum> maximize(const AffineFunction& objective,
                                std::span<const AffineFunction> constraints,
                                const Bounds& bounds) {
  const std::size_t m = bounds.dim();
  require_same_dim(objective.dim(), m, "box LP objective");
  for (const auto& g : constraints) require_same_dim(g.dim(), m, "box LP constraint");
  for (std::size_t i = 0; i < m; ++i) {
    if (bounds.lo[i] > bounds.hi[i]) return std::nullopt;
  }
  if (m == 1) return maximize_1d(objective, constraints, bounds);

  // Shift y = x - lo so that the lower bounds become y >= 0.
  lp::Problem problem;
  problem.nonnegative = true;
  for (const auto& g : constraints) {
    if (g.is_constant()) {
      if (g.b.sign() < 0) return std::nullopt;
      continue;
    }
    std::vector<Rational> row(m);
    Rational rhs = g.b;
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = -g.v[i];
      rhs += g.v[i] * bounds.lo[i];
    }
    problem.a.push_back(std::move(row));
    problem.b.push_back(std::move(rhs));
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(m);
    row[i] = 1;
    problem.a.push_back(std::move(row));
    problem.b.push_back(bounds.hi[i] - bounds.lo[i]);
  }
  problem.c = objective.v;
  lp::Result r = lp::solve(problem);
  if (r.status == lp::Status::kInfeasible) return std::nullopt;
  if (r.status == lp::Status::kUnbounded) {
    throw Error(ErrorKind::kInternalInconsistency, "bounded LP reported unbounded");
  }
  Point x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = r.x[i] + bounds.lo[i];
  Rational value = eval_affine(objective, x);
  return Optimum{std::move(value), std::move(x)};
}

std::optional<Optimum> minimize(const AffineFunction& objective,
                                std::span<const AffineFunction> constraints,
                                const Bounds& bounds) {
  auto best = maximize(-objective, constraints, bounds);
  if (best) best->value = -best->value;
  return best;
}

}  // namespace pa::detail
