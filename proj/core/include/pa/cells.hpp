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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pa/affine.hpp"
#include "pa/expr.hpp"
#include "pa/limits.hpp"

namespace pa {

// A non-empty open convex piece of the box interior minus the arrangement.
struct Cell {
  // Strict inequalities g > 0: the box interior first, then one signed
  // inequality per arrangement hyperplane.
  std::vector<AffineFunction> constraints;
  // Satisfies every constraint strictly.
  Point witness;
  // '+' or '-' per hyperplane, in arrangement order.
  std::string signs;
  // Exact coordinate extent of the closure when known; empty otherwise.
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

// A component together with the cells whose closures make up its region.
struct CharacteristicPair {
  AffineFunction component;
  std::vector<std::size_t> region_cells;
};

struct CellComplex {
  SolidBox box;
  std::vector<AffineFunction> components;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Cell> cells;
  // cell index -> index into components
  std::vector<std::size_t> assignment;
};

enum class Order { kBelow, kAbove, kEqual };

// A continuous function that agrees at every point with one of `candidates`.
// Lets the cell machinery analyze functions that are not stored as a
// MinMaxExpr, such as the difference of two expressions.
struct PiecewiseAffine {
  std::size_t dim = 0;
  std::vector<AffineFunction> candidates;
  std::function<Rational(const Point&)> evaluate;
};

// Distinct affine members of `e`, in order of first occurrence.
std::vector<AffineFunction> collect_components(const MinMaxExpr& e);

// The distinct hyperplanes {f_i = f_j} (normalized, sorted) that cut the
// interior of `box`. Parallel pairs induce nothing. Throws
// kTooManyHyperplanes above limits.hyperplane_limit.
std::vector<Hyperplane> induced_hyperplanes(std::span<const AffineFunction> components,
                                            const SolidBox& box, const Limits& limits = {});

// Cells of the arrangement induced by `components` inside the open box. Each
// sign vector occurs once; the cell closures cover the box.
std::vector<Cell> enumerate_cells(std::span<const AffineFunction> components,
                                  const SolidBox& box, const Limits& limits = {});

// A rational point with g(x) > 0 for every constraint, or std::nullopt when
// the open polyhedron is empty. Maximizes a slack s with g(x) >= s, s <= 1.
std::optional<Point> interior_witness(std::span<const AffineFunction> constraints,
                                      std::size_t dim);

// For each cell, the index (into collect_components(e)) of the member that
// equals e on the cell.
std::vector<std::size_t> assign_components(const MinMaxExpr& e, std::span<const Cell> cells);

CellComplex build_complex(const MinMaxExpr& e, const SolidBox& box, const Limits& limits = {});
CellComplex build_complex(const PiecewiseAffine& f, const SolidBox& box,
                          const Limits& limits = {});

// Groups cells by component; components attained on no cell are dropped.
std::vector<CharacteristicPair> characteristic_pairs(const CellComplex& complex);
std::vector<CharacteristicPair> characteristic_pairs(const MinMaxExpr& e, const SolidBox& box,
                                                     const Limits& limits = {});

// Compares g with the component e agrees with on `cell`.
// Throws kNotAComponent if g is not a member of e.
Order strict_order_on_cell(const MinMaxExpr& e, const Cell& cell, const AffineFunction& g);

// Exact (min, max) of e over the closed box.
std::pair<Rational, Rational> bound_on_box(const MinMaxExpr& e, const SolidBox& box,
                                           const Limits& limits = {});
std::pair<Rational, Rational> bound_on_complex(const CellComplex& complex);

// max over cells K of min { f_j : f_j >= f_i(K) on the closure of K }. Agrees
// with the analyzed function on the box and is defined on all of R^m.
MinMaxExpr max_min_from_pairs(const CellComplex& complex);

// Exact extent [min, max] of coordinate i over the closure of the cell.
std::pair<Rational, Rational> coordinate_range(const Cell& cell, std::size_t i);

// Non-strict satisfaction of every constraint.
bool closure_contains(const Cell& cell, const Point& x);

// Complex of e1 - e2 on the box. Its candidates are the differences of the
// members of e1 and e2 active on the common arrangement, so the expensive
// distributive expansion behind add(e1, negate(e2)) is never formed.
CellComplex difference_complex(const MinMaxExpr& e1, const MinMaxExpr& e2,
                               const SolidBox& box, const Limits& limits = {});
// Exact (min, max) of e1 - e2 over the closed box.
std::pair<Rational, Rational> bound_of_difference(const MinMaxExpr& e1, const MinMaxExpr& e2,
                                                  const SolidBox& box,
                                                  const Limits& limits = {});
// An expression equal to e1 - e2 on the box.
MinMaxExpr difference_on_box(const MinMaxExpr& e1, const MinMaxExpr& e2, const SolidBox& box,
                             const Limits& limits = {});

}  // namespace pa
