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

#include "pa/approx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "pa/cells.hpp"
#include "pa/errors.hpp"

namespace pa {
namespace {

class Grid {
 public:
  Grid(const SolidBox& box, const Rational& step, const Limits& limits)
      : dim_(box.dim()), step_(step) {
    if (step.sign() <= 0) throw Error(ErrorKind::kBadStep, "step must be positive");
    const Rational q = box.radius() * 2 / step;
    if (!q.is_integer()) {
      throw Error(ErrorKind::kBadStep, "step " + step.to_string() + " does not divide edge " +
                                           (box.radius() * 2).to_string());
    }
    cells_ = q.floor();
    std::size_t count = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto per_axis = static_cast<std::size_t>(cells_ + 1);
      if (count > limits.grid_budget / per_axis) {
        throw Error(ErrorKind::kGridTooLarge,
                    "grid exceeds " + std::to_string(limits.grid_budget) + " vertices");
      }
      count *= per_axis;
    }
    for (std::size_t i = 0; i < dim_; ++i) lo_.push_back(box.lower(i));
    values_.reserve(count);
    vertices_ = count;
  }

  std::size_t dim() const { return dim_; }
  std::int64_t cells() const { return cells_; }
  std::size_t vertices() const { return vertices_; }
  const Rational& step() const { return step_; }

  Point vertex(const std::vector<std::int64_t>& idx) const {
    Point p(dim_);
    for (std::size_t i = 0; i < dim_; ++i) p[i] = lo_[i] + step_ * Rational(static_cast<long>(idx[i]));
    return p;
  }

  std::size_t flat(const std::vector<std::int64_t>& idx) const {
    std::size_t f = 0;
    for (std::size_t i = dim_; i-- > 0;) f = f * static_cast<std::size_t>(cells_ + 1) + idx[i];
    return f;
  }

  // Visits vertex indices in flat order.
  template <typename Visit>
  void for_each_vertex(Visit&& visit) const {
    std::vector<std::int64_t> idx(dim_, 0);
    for (std::size_t n = 0; n < vertices_; ++n) {
      visit(idx);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (++idx[i] <= cells_) break;
        idx[i] = 0;
      }
    }
  }

  void sample(const ContinuousOracle& oracle) {
    for_each_vertex([&](const std::vector<std::int64_t>& idx) {
      Rational v = oracle.evaluate(vertex(idx));
      if (oracle.nonnegative && v.sign() < 0) {
        throw Error(ErrorKind::kNotNonnegative,
                    oracle.name + " returned " + v.to_string() + " at a grid vertex");
      }
      values_.push_back(std::move(v));
    });
  }

  const Rational& value(const std::vector<std::int64_t>& idx) const { return values_[flat(idx)]; }
  const std::vector<Rational>& values() const { return values_; }

  // Affine interpolant on the Kuhn simplex of cube `base` whose vertices are
  // base, base + e_{order[0]}, base + e_{order[0]} + e_{order[1]}, ...
  AffineFunction simplex_affine(std::vector<std::int64_t> idx,
                                const std::vector<std::size_t>& order) const {
    AffineFunction a = AffineFunction::constant(dim_, 0);
    const Point origin = vertex(idx);
    Rational prev = value(idx);
    const Rational v0 = prev;
    for (auto axis : order) {
      ++idx[axis];
      const Rational next = value(idx);
      a.v[axis] = (next - prev) / step_;
      prev = next;
    }
    Rational b = v0;
    for (std::size_t i = 0; i < dim_; ++i) b -= a.v[i] * origin[i];
    a.b = b;
    return a;
  }

  Rational interpolate(const Point& x) const {
    std::vector<std::int64_t> idx(dim_);
    std::vector<Rational> frac(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const Rational t = (x[i] - lo_[i]) / step_;
      idx[i] = std::clamp<std::int64_t>(t.floor(), 0, cells_ - 1);
      frac[i] = t - Rational(static_cast<long>(idx[i]));
    }
    std::vector<std::size_t> order(dim_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    Rational result = (Rational(1) - frac[order[0]]) * value(idx);
    for (std::size_t t = 0; t < dim_; ++t) {
      ++idx[order[t]];
      const Rational next = t + 1 < dim_ ? frac[order[t + 1]] : Rational(0);
      result += (frac[order[t]] - next) * value(idx);
    }
    return result;
  }

 private:
  std::size_t dim_;
  Rational step_;
  std::int64_t cells_ = 0;
  std::size_t vertices_ = 0;
  std::vector<Rational> lo_;
  std::vector<Rational> values_;
};

// On a line every segment's clause {j : a_j >= a_s on the segment} is exact.
MinMaxExpr interpolant_1d(const Grid& grid) {
  std::vector<AffineFunction> pieces;
  for (std::int64_t s = 0; s < grid.cells(); ++s) pieces.push_back(grid.simplex_affine({s}, {0}));
  std::vector<AffineFunction> distinct;
  std::set<AffineFunction> seen;
  for (const auto& p : pieces) {
    if (seen.insert(p).second) distinct.push_back(p);
  }
  std::vector<MinMaxExpr::Clause> clauses;
  std::set<MinMaxExpr::Clause> seen_clauses;
  for (std::int64_t s = 0; s < grid.cells(); ++s) {
    const Point left = grid.vertex({s});
    const Point right = grid.vertex({s + 1});
    const Rational vl = eval_affine(pieces[s], left);
    const Rational vr = eval_affine(pieces[s], right);
    MinMaxExpr::Clause clause;
    for (const auto& a : distinct) {
      if (eval_affine(a, left) >= vl && eval_affine(a, right) >= vr) clause.push_back(a);
    }
    if (seen_clauses.insert(clause).second) clauses.push_back(std::move(clause));
  }
  return MinMaxExpr(1, std::move(clauses));
}

MinMaxExpr interpolant_general(const Grid& grid, const SolidBox& box, const Limits& limits) {
  const std::size_t m = grid.dim();
  std::vector<AffineFunction> candidates;
  std::set<AffineFunction> seen;
  std::vector<std::size_t> order(m);
  std::vector<std::int64_t> idx(m, 0);
  std::size_t cubes = 1;
  for (std::size_t i = 0; i < m; ++i) cubes *= static_cast<std::size_t>(grid.cells());
  for (std::size_t n = 0; n < cubes; ++n) {
    std::iota(order.begin(), order.end(), 0);
    do {
      auto a = grid.simplex_affine(idx, order);
      if (seen.insert(a).second) candidates.push_back(std::move(a));
    } while (std::next_permutation(order.begin(), order.end()));
    for (std::size_t i = 0; i < m; ++i) {
      if (++idx[i] < grid.cells()) break;
      idx[i] = 0;
    }
  }
  PiecewiseAffine f{m, std::move(candidates), [&grid](const Point& x) { return grid.interpolate(x); }};
  return max_min_from_pairs(build_complex(f, box, limits));
}

Rational first_step(const Rational& lipschitz, const Rational& target) {
  Rational step(1);
  while (lipschitz * step > target) step = step / 2;
  return step;
}

struct PartFamily {
  LocallyFiniteFamily family;
  std::optional<Rational> bound;
};

PartFamily approximate_part(const ContinuousOracle& part, const Rational& epsilon,
                            std::int64_t radius, const ApproxOptions& options,
                            ApproxReport& report, bool record_steps) {
  const std::size_t m = part.dim;
  std::vector<BoxedPA> members;
  std::optional<Rational> bound = part.lipschitz ? std::optional<Rational>(0) : std::nullopt;
  for (const auto& c : lattice_points(m, radius)) {
    const Point center = to_point(c);
    const SolidBox wide(center, 2);
    Rational step = options.fallback_step;
    if (part.lipschitz) {
      const Rational l = part.lipschitz(wide);
      step = first_step(l, epsilon / 2);
      bound = std::max(*bound, l * step);
    }
    if (record_steps) report.grid_steps[c] = step;
    const Interpolant interp = kuhn_interpolant(part, wide, step, options.limits);
    ++report.boxes_processed;
    if (interp.vertex_min.sign() < 0) {
      throw Error(ErrorKind::kNotNonnegative, part.name + " is negative at a grid vertex");
    }
    if (interp.vertex_max.is_zero()) continue;
    // The extension of the interpolant beyond the box may dip below zero;
    // clamping keeps the member zero outside the bump.
    MinMaxExpr member = meet(join(interp.expr, MinMaxExpr::constant(m, 0)),
                             bump(center, 1, 2, interp.vertex_max + 1));
    members.push_back(BoxedPA{std::move(member), wide, c});
  }
  FamilyMetadata metadata;
  metadata.truncation_radius = radius;
  return PartFamily{
      LocallyFiniteFamily::from_members(m, std::move(members), true, Rational(2), metadata), bound};
}

void require_monotone_inputs(const ContinuousOracle& oracle, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::kInvalidArgument, "count must be at least 1");
  if (!oracle.lipschitz) {
    throw Error(ErrorKind::kInvalidArgument, oracle.name + " has no Lipschitz data");
  }
  if (!oracle.nonnegative) {
    throw Error(ErrorKind::kNotNonnegative, oracle.name + " is not flagged nonnegative");
  }
}

}  // namespace

ContinuousOracle positive_part(const ContinuousOracle& f) {
  ContinuousOracle p = f;
  p.name = "max(" + f.name + ",0)";
  p.evaluate = [g = f.evaluate](const Point& x) { return std::max(g(x), Rational(0)); };
  p.nonnegative = true;
  return p;
}

ContinuousOracle negative_part(const ContinuousOracle& f) {
  ContinuousOracle p = f;
  p.name = "max(-" + f.name + ",0)";
  p.evaluate = [g = f.evaluate](const Point& x) { return std::max(-g(x), Rational(0)); };
  p.nonnegative = true;
  return p;
}

Interpolant kuhn_interpolant(const ContinuousOracle& oracle, const SolidBox& box,
                             const Rational& step, const Limits& limits) {
  require_same_dim(oracle.dim, box.dim(), "interpolation box");
  Grid grid(box, step, limits);
  grid.sample(oracle);
  const auto [lo, hi] = std::minmax_element(grid.values().begin(), grid.values().end());
  Interpolant out{grid.dim() == 1 ? interpolant_1d(grid) : interpolant_general(grid, box, limits),
                  *lo, *hi, grid.vertices()};
  return out;
}

Point random_point(std::mt19937_64& rng, const SolidBox& box, std::int64_t denominator) {
  Point p(box.dim());
  const Rational d(static_cast<long>(denominator));
  for (std::size_t i = 0; i < box.dim(); ++i) {
    std::uniform_int_distribution<std::int64_t> pick((box.lower(i) * d).ceil(),
                                                     (box.upper(i) * d).floor());
    p[i] = Rational(static_cast<long>(pick(rng)), static_cast<long>(denominator));
  }
  return p;
}

UniformApprox uniform_approx(const ContinuousOracle& oracle, const Rational& epsilon,
                             std::int64_t radius, const ApproxOptions& options) {
  if (epsilon.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "epsilon must be positive");
  if (radius <= 0) throw Error(ErrorKind::kInvalidArgument, "radius must be positive");
  ApproxReport report;
  report.epsilon = epsilon;
  report.covered_radius = radius + 1;

  const ContinuousOracle upper = oracle.nonnegative ? oracle : positive_part(oracle);
  PartFamily plus = approximate_part(upper, epsilon, radius, options, report, true);
  LPAFunction h = sup_family(std::move(plus.family));
  report.certified_bound = plus.bound;
  if (!oracle.nonnegative) {
    PartFamily minus =
        approximate_part(negative_part(oracle), epsilon, radius, options, report, false);
    if (report.certified_bound && minus.bound) {
      report.certified_bound = *report.certified_bound + *minus.bound;
    } else {
      report.certified_bound.reset();
    }
    if (!minus.family.listed_members().empty()) h.subtracted = std::move(minus.family);
  }

  std::mt19937_64 rng(options.seed);
  const SolidBox covered = SolidBox::omega(oracle.dim, Rational(static_cast<long>(radius + 1)));
  Rational worst(0);
  for (std::size_t s = 0; s < options.samples; ++s) {
    Point x = random_point(rng, covered);
    Rational f = oracle.evaluate(x);
    Rational hv = eval_lpa(h, x);
    worst = std::max(worst, (f - hv).abs());
    report.samples.push_back(ValidationSample{std::move(x), std::move(f), std::move(hv)});
  }
  report.max_observed_error = worst;
  return UniformApprox{std::move(h), std::move(report)};
}

ApproxSequence monotone_under_approx(const ContinuousOracle& oracle, std::size_t count,
                                     const Limits& limits) {
  require_monotone_inputs(oracle, count);
  const std::size_t m = oracle.dim;
  ApproxSequence out;
  MinMaxExpr h = MinMaxExpr::constant(m, 0);
  for (std::size_t k = 1; k <= count; ++k) {
    const Rational delta = Rational::pow2(-static_cast<int>(k));
    const auto inner = static_cast<long>(k);
    const SolidBox box = SolidBox::omega(m, Rational(inner + 1));
    const Rational shift = oracle.lipschitz(box) * delta;
    const Interpolant interp = kuhn_interpolant(oracle, box, delta, limits);
    const Rational height = std::max(interp.vertex_max - shift, Rational(0));
    if (height.sign() > 0) {
      // Lowered by the interpolation error, the interpolant stays below f on
      // the box; the bump cuts it off outside.
      MinMaxExpr lowered = join(add(interp.expr, MinMaxExpr::constant(m, -shift)),
                                MinMaxExpr::constant(m, 0));
      h = join(h, meet(lowered, bump(Point(m, Rational(0)), Rational(inner),
                                     Rational(inner + 1), height)));
    }
    out.terms.push_back(h);
    out.bounds.push_back(shift * 2);
  }
  return out;
}

ApproxSequence order_approx(const ContinuousOracle& oracle, std::size_t count,
                            const Limits& limits) {
  if (!oracle.lipschitz) {
    throw Error(ErrorKind::kInvalidArgument, oracle.name + " has no Lipschitz data");
  }
  const ApproxSequence g = monotone_under_approx(positive_part(oracle), count, limits);
  const ApproxSequence h = monotone_under_approx(negative_part(oracle), count, limits);
  ApproxSequence out;
  for (std::size_t k = 0; k < count; ++k) {
    out.terms.push_back(add(g.terms[k], negate(h.terms[k], limits)));
    out.bounds.push_back(g.bounds[k] + h.bounds[k]);
  }
  return out;
}

}  // namespace pa
