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

#include "pa/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "box_lp.hpp"
#include "pa/errors.hpp"
#include "pa/lp.hpp"

namespace pa {
namespace {

// Hyperplane constraints of a cell, skipping the leading box inequalities.
std::span<const AffineFunction> arrangement_constraints(const Cell& cell, std::size_t dim) {
  return std::span<const AffineFunction>(cell.constraints).subspan(2 * dim);
}

Rational eval_hyperplane(const Hyperplane& h, const Point& x) { return eval_affine(h.g(), x); }

// Interior point of cell ∩ {h < 0} given the cell witness w (h(w) > 0 or
// == 0) and a closure point u with h(u) < 0: a point on the open segment
// (w, u) past the crossing.
Point past_crossing(const Point& w, const Point& u, const Rational& hw, const Rational& hu) {
  // h(w + t(u - w)) = hw + t(hu - hw) vanishes at t0 = hw / (hw - hu).
  const Rational t0 = hw / (hw - hu);
  const Rational t = (t0 + 1) / 2;
  Point p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[i] + t * (u[i] - w[i]);
  return p;
}

// Outer bounding box of a cell closure plus the closure constraints that the
// box does not already imply. LPs over (live, bounds) describe the closure.
struct Outline {
  detail::Bounds bounds;
  std::vector<AffineFunction> live;
};

std::pair<Rational, Rational> range_over(const AffineFunction& g, const detail::Bounds& b) {
  Rational lo = g.b;
  Rational hi = g.b;
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    const Rational a = g.v[i] * b.lo[i];
    const Rational c = g.v[i] * b.hi[i];
    lo += std::min(a, c);
    hi += std::max(a, c);
  }
  return {std::move(lo), std::move(hi)};
}

Outline refine(const Outline& parent, const AffineFunction& added, std::size_t m) {
  Outline out{parent.bounds, parent.live};
  out.live.push_back(added);
  for (std::size_t i = 0; i < m; ++i) {
    const auto axis = AffineFunction::coordinate(m, i);
    const auto hi = detail::maximize(axis, out.live, parent.bounds);
    const auto lo = detail::minimize(axis, out.live, parent.bounds);
    if (!hi || !lo) throw Error(ErrorKind::kInternalInconsistency, "split produced an empty cell");
    out.bounds.hi[i] = hi->value;
    out.bounds.lo[i] = lo->value;
  }
  std::erase_if(out.live,
                [&](const AffineFunction& g) { return range_over(g, out.bounds).first.sign() >= 0; });
  return out;
}

Cell child(const Cell& parent, const Hyperplane& h, bool positive, Point witness) {
  Cell c;
  c.constraints = parent.constraints;
  c.constraints.push_back(positive ? h.g() : -h.g());
  c.witness = std::move(witness);
  c.signs = parent.signs + (positive ? '+' : '-');
  return c;
}

std::vector<Cell> enumerate_cells_1d(const std::vector<Hyperplane>& hyperplanes,
                                     const SolidBox& box) {
  // Normalized 1-D hyperplanes read t + beta = 0.
  std::vector<Rational> roots;
  roots.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) roots.push_back(-h.g().b);
  std::vector<Rational> cuts = roots;
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), box.lower(0));
  cuts.push_back(box.upper(0));

  const auto base = box_interior_constraints(box);
  std::vector<Cell> cells;
  cells.reserve(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Cell c;
    c.witness = Point{(cuts[k] + cuts[k + 1]) / 2};
    c.lower = {cuts[k]};
    c.upper = {cuts[k + 1]};
    c.constraints = base;
    for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
      const bool positive = c.witness[0] > roots[j];
      c.constraints.push_back(positive ? hyperplanes[j].g() : -hyperplanes[j].g());
      c.signs.push_back(positive ? '+' : '-');
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

std::size_t active_index(std::span<const AffineFunction> components, const Point& w,
                         const Rational& value) {
  std::size_t found = components.size();
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (eval_affine(components[j], w) != value) continue;
    if (found != components.size()) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "two components attain the function value at a cell witness");
    }
    found = j;
  }
  if (found == components.size()) {
    throw Error(ErrorKind::kInternalInconsistency, "no component matches at a cell witness");
  }
  return found;
}

std::vector<AffineFunction> dedup(std::vector<AffineFunction> fs) {
  std::vector<AffineFunction> out;
  std::set<AffineFunction> seen;
  for (auto& f : fs) {
    if (seen.insert(f).second) out.push_back(std::move(f));
  }
  return out;
}

std::pair<Rational, Rational> extent_over_closure(const Cell& cell, const SolidBox& box,
                                                  const AffineFunction& f) {
  const auto constraints = arrangement_constraints(cell, box.dim());
  const auto bounds = detail::Bounds::of(box);
  auto hi = detail::maximize(f, constraints, bounds);
  auto lo = detail::minimize(f, constraints, bounds);
  if (!hi || !lo) throw Error(ErrorKind::kInternalInconsistency, "empty cell closure");
  return {std::move(lo->value), std::move(hi->value)};
}

}  // namespace

std::vector<AffineFunction> collect_components(const MinMaxExpr& e) {
  std::vector<AffineFunction> all;
  for (const auto& clause : e.clauses()) all.insert(all.end(), clause.begin(), clause.end());
  return dedup(std::move(all));
}

std::vector<Hyperplane> induced_hyperplanes(std::span<const AffineFunction> components,
                                            const SolidBox& box, const Limits& limits) {
  std::set<Hyperplane> unique;
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_dim(components[i].dim(), box.dim(), "component");
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      auto h = difference_hyperplane(components[i], components[j]);
      if (!h) continue;
      Hyperplane n = h->normalized();
      if (min_over_box(n.g(), box).sign() < 0 && max_over_box(n.g(), box).sign() > 0) {
        unique.insert(std::move(n));
      }
    }
  }
  if (unique.size() > limits.hyperplane_limit) {
    throw Error(ErrorKind::kTooManyHyperplanes,
                std::to_string(unique.size()) + " hyperplanes cut the box (limit " +
                    std::to_string(limits.hyperplane_limit) + ")");
  }
  return {unique.begin(), unique.end()};
}

std::vector<Cell> enumerate_cells(std::span<const AffineFunction> components,
                                  const SolidBox& box, const Limits& limits) {
  if (components.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "cell enumeration needs a component");
  }
  const auto hyperplanes = induced_hyperplanes(components, box, limits);
  if (box.dim() == 1) return enumerate_cells_1d(hyperplanes, box);

  const std::size_t m = box.dim();
  std::vector<Cell> cells(1);
  cells[0].constraints = box_interior_constraints(box);
  cells[0].witness = box.center();
  std::vector<Outline> outlines{Outline{detail::Bounds::of(box), {}}};

  for (const auto& h : hyperplanes) {
    std::vector<Cell> next;
    std::vector<Outline> next_outlines;
    next.reserve(2 * cells.size());
    next_outlines.reserve(2 * cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const Cell& cell = cells[k];
      const Outline& outline = outlines[k];
      const auto [h_lo, h_hi] = range_over(h.g(), outline.bounds);
      if (h_lo.sign() >= 0 || h_hi.sign() <= 0) {
        // The hyperplane misses the cell interior; only the sign is recorded.
        const bool positive = eval_hyperplane(h, cell.witness).sign() > 0;
        next.push_back(child(cell, h, positive, cell.witness));
        next_outlines.push_back(outline);
        continue;
      }
      const Rational hw = eval_hyperplane(h, cell.witness);
      std::optional<Point> plus;
      std::optional<Point> minus;
      if (hw.sign() > 0) {
        plus = cell.witness;
      } else {
        auto best = detail::maximize(h.g(), outline.live, outline.bounds);
        if (best && best->value.sign() > 0) {
          plus = past_crossing(cell.witness, best->x, -hw, -best->value);
        }
      }
      if (hw.sign() < 0) {
        minus = cell.witness;
      } else {
        auto best = detail::minimize(h.g(), outline.live, outline.bounds);
        if (best && best->value.sign() < 0) {
          minus = past_crossing(cell.witness, best->x, hw, best->value);
        }
      }
      if (plus && minus) {
        for (const bool positive : {true, false}) {
          next.push_back(child(cell, h, positive, std::move(positive ? *plus : *minus)));
          next_outlines.push_back(refine(outline, positive ? h.g() : -h.g(), m));
        }
      } else {
        next.push_back(child(cell, h, plus.has_value(), std::move(plus ? *plus : *minus)));
        next_outlines.push_back(outline);
      }
    }
    cells = std::move(next);
    outlines = std::move(next_outlines);
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    cells[k].lower = std::move(outlines[k].bounds.lo);
    cells[k].upper = std::move(outlines[k].bounds.hi);
  }
  return cells;
}

std::optional<Point> interior_witness(std::span<const AffineFunction> constraints,
                                      std::size_t dim) {
  // Variables (x, s): maximize s subject to s - g(x) <= 0 and s <= 1.
  lp::Problem problem;
  problem.nonnegative = false;
  for (const auto& g : constraints) {
    require_same_dim(g.dim(), dim, "witness constraint");
    std::vector<Rational> row(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) row[i] = -g.v[i];
    row[dim] = 1;
    problem.a.push_back(std::move(row));
    problem.b.push_back(g.b);
  }
  std::vector<Rational> cap(dim + 1);
  cap[dim] = 1;
  problem.a.push_back(std::move(cap));
  problem.b.push_back(1);
  problem.c.assign(dim + 1, Rational());
  problem.c[dim] = 1;
  const auto r = lp::solve(problem);
  if (r.status != lp::Status::kOptimal || r.value.sign() <= 0) return std::nullopt;
  return Point(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(dim));
}

std::vector<std::size_t> assign_components(const MinMaxExpr& e, std::span<const Cell> cells) {
  const auto components = collect_components(e);
  std::vector<std::size_t> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    out.push_back(active_index(components, cell.witness, eval(e, cell.witness)));
  }
  return out;
}

CellComplex build_complex(const PiecewiseAffine& f, const SolidBox& box, const Limits& limits) {
  require_same_dim(f.dim, box.dim(), "build_complex");
  auto components = dedup(f.candidates);
  auto hyperplanes = induced_hyperplanes(components, box, limits);
  auto cells = enumerate_cells(components, box, limits);
  std::vector<std::size_t> assignment;
  assignment.reserve(cells.size());
  for (const auto& cell : cells) {
    assignment.push_back(active_index(components, cell.witness, f.evaluate(cell.witness)));
  }
  return CellComplex{box, std::move(components), std::move(hyperplanes), std::move(cells),
                     std::move(assignment)};
}

CellComplex build_complex(const MinMaxExpr& e, const SolidBox& box, const Limits& limits) {
  return build_complex(
      PiecewiseAffine{e.dim(), collect_components(e), [&e](const Point& x) { return eval(e, x); }},
      box, limits);
}

std::vector<CharacteristicPair> characteristic_pairs(const CellComplex& complex) {
  std::map<std::size_t, std::vector<std::size_t>> regions;
  for (std::size_t k = 0; k < complex.cells.size(); ++k) {
    regions[complex.assignment[k]].push_back(k);
  }
  std::vector<CharacteristicPair> pairs;
  pairs.reserve(regions.size());
  for (auto& [component, cells] : regions) {
    pairs.push_back(CharacteristicPair{complex.components[component], std::move(cells)});
  }
  return pairs;
}

std::vector<CharacteristicPair> characteristic_pairs(const MinMaxExpr& e, const SolidBox& box,
                                                     const Limits& limits) {
  return characteristic_pairs(build_complex(e, box, limits));
}

Order strict_order_on_cell(const MinMaxExpr& e, const Cell& cell, const AffineFunction& g) {
  const auto components = collect_components(e);
  if (std::find(components.begin(), components.end(), g) == components.end()) {
    throw Error(ErrorKind::kNotAComponent, "affine function is not a member of the expression");
  }
  const Rational value = eval(e, cell.witness);
  const auto& active = components[active_index(components, cell.witness, value)];
  if (active == g) return Order::kEqual;
  return eval_affine(g, cell.witness) < value ? Order::kBelow : Order::kAbove;
}

std::pair<Rational, Rational> bound_on_complex(const CellComplex& complex) {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (std::size_t k = 0; k < complex.cells.size(); ++k) {
    auto [cell_lo, cell_hi] = extent_over_closure(
        complex.cells[k], complex.box, complex.components[complex.assignment[k]]);
    if (!lo || cell_lo < *lo) lo = std::move(cell_lo);
    if (!hi || cell_hi > *hi) hi = std::move(cell_hi);
  }
  return {*lo, *hi};
}

std::pair<Rational, Rational> bound_on_box(const MinMaxExpr& e, const SolidBox& box,
                                           const Limits& limits) {
  return bound_on_complex(build_complex(e, box, limits));
}

MinMaxExpr max_min_from_pairs(const CellComplex& complex) {
  const std::size_t m = complex.box.dim();
  std::vector<MinMaxExpr::Clause> clauses;
  clauses.reserve(complex.cells.size());
  for (std::size_t k = 0; k < complex.cells.size(); ++k) {
    const auto& w = complex.cells[k].witness;
    const std::size_t i = complex.assignment[k];
    const Rational fi = eval_affine(complex.components[i], w);
    // The witness avoids every {f_j = f_i}, so the sign there holds on the
    // whole cell and, by continuity, on its closure.
    MinMaxExpr::Clause clause;
    for (std::size_t j = 0; j < complex.components.size(); ++j) {
      if (j == i || eval_affine(complex.components[j], w) > fi) {
        clause.push_back(complex.components[j]);
      }
    }
    if (clause.empty()) {
      throw Error(ErrorKind::kInternalInconsistency, "empty index set for a cell");
    }
    clauses.push_back(std::move(clause));
  }
  return MinMaxExpr(m, std::move(clauses));
}

std::pair<Rational, Rational> coordinate_range(const Cell& cell, std::size_t i) {
  const std::size_t m = cell.witness.size();
  if (i >= m) throw Error(ErrorKind::kInvalidArgument, "coordinate index out of range");
  if (cell.lower.size() == m && cell.upper.size() == m) return {cell.lower[i], cell.upper[i]};
  lp::Problem problem;
  problem.nonnegative = false;
  for (const auto& g : cell.constraints) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = -g.v[j];
    problem.a.push_back(std::move(row));
    problem.b.push_back(g.b);
  }
  problem.c.assign(m, Rational());
  problem.c[i] = 1;
  const auto hi = lp::solve(problem);
  problem.c[i] = -1;
  const auto lo = lp::solve(problem);
  if (hi.status != lp::Status::kOptimal || lo.status != lp::Status::kOptimal) {
    throw Error(ErrorKind::kInternalInconsistency, "cell closure is empty or unbounded");
  }
  return {-lo.value, hi.value};
}

bool closure_contains(const Cell& cell, const Point& x) {
  return std::all_of(cell.constraints.begin(), cell.constraints.end(),
                     [&](const AffineFunction& g) { return eval_affine(g, x).sign() >= 0; });
}

}  // namespace pa
