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

// Pairwise analyses of two expressions over their common arrangement.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "box_lp.hpp"
#include "pa/cells.hpp"
#include "pa/errors.hpp"

namespace pa {
namespace {

struct JointCell {
  const Cell* cell;
  AffineFunction first;
  AffineFunction second;
};

AffineFunction active_member(const std::vector<AffineFunction>& members, const MinMaxExpr& e,
                             const Point& w) {
  const Rational value = eval(e, w);
  for (const auto& f : members) {
    if (eval_affine(f, w) == value) return f;
  }
  throw Error(ErrorKind::kInternalInconsistency, "no member attains the value at a witness");
}

template <typename Visit>
void for_each_joint_cell(const MinMaxExpr& e1, const MinMaxExpr& e2, const SolidBox& box,
                         const Limits& limits, Visit&& visit) {
  require_same_dim(e1.dim(), e2.dim(), "joint analysis");
  require_same_dim(e1.dim(), box.dim(), "joint analysis box");
  const auto members1 = collect_components(e1);
  const auto members2 = collect_components(e2);
  std::vector<AffineFunction> joint = members1;
  std::set<AffineFunction> seen(joint.begin(), joint.end());
  for (const auto& f : members2) {
    if (seen.insert(f).second) joint.push_back(f);
  }
  const auto cells = enumerate_cells(joint, box, limits);
  for (const auto& cell : cells) {
    if (!visit(JointCell{&cell, active_member(members1, e1, cell.witness),
                         active_member(members2, e2, cell.witness)})) {
      return;
    }
  }
}

}  // namespace

bool semantic_equal(const MinMaxExpr& e1, const MinMaxExpr& e2, const SolidBox& box,
                    const Limits& limits) {
  bool equal = true;
  for_each_joint_cell(e1, e2, box, limits, [&](const JointCell& jc) {
    equal = jc.first == jc.second;
    return equal;
  });
  return equal;
}

std::pair<Rational, Rational> bound_of_difference(const MinMaxExpr& e1, const MinMaxExpr& e2,
                                                  const SolidBox& box, const Limits& limits) {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  const auto bounds = detail::Bounds::of(box);
  for_each_joint_cell(e1, e2, box, limits, [&](const JointCell& jc) {
    const AffineFunction d = jc.first - jc.second;
    const auto closure =
        std::span<const AffineFunction>(jc.cell->constraints).subspan(2 * box.dim());
    auto top = detail::maximize(d, closure, bounds);
    auto bottom = detail::minimize(d, closure, bounds);
    if (!top || !bottom) throw Error(ErrorKind::kInternalInconsistency, "empty cell closure");
    if (!lo || bottom->value < *lo) lo = bottom->value;
    if (!hi || top->value > *hi) hi = top->value;
    return true;
  });
  return {*lo, *hi};
}

CellComplex difference_complex(const MinMaxExpr& e1, const MinMaxExpr& e2,
                               const SolidBox& box, const Limits& limits) {
  std::vector<AffineFunction> candidates;
  std::set<AffineFunction> seen;
  for_each_joint_cell(e1, e2, box, limits, [&](const JointCell& jc) {
    AffineFunction d = jc.first - jc.second;
    if (seen.insert(d).second) candidates.push_back(std::move(d));
    return true;
  });
  PiecewiseAffine diff{e1.dim(), std::move(candidates),
                       [&](const Point& x) { return eval(e1, x) - eval(e2, x); }};
  return build_complex(diff, box, limits);
}

MinMaxExpr difference_on_box(const MinMaxExpr& e1, const MinMaxExpr& e2, const SolidBox& box,
                             const Limits& limits) {
  return max_min_from_pairs(difference_complex(e1, e2, box, limits));
}

}  // namespace pa
