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

#include "pa/lpa.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "pa/errors.hpp"

namespace pa {

struct LocallyFiniteFamily::GeneratorState {
  Generator generator;
  std::mutex mutex;
  std::map<Anchor, BoxedPA> cache;
};

namespace {

std::int64_t max_norm(const Anchor& a) {
  std::int64_t n = 0;
  for (auto c : a) n = std::max(n, c < 0 ? -c : c);
  return n;
}

bool anchor_before(const Anchor& a, const Anchor& b) {
  const auto na = max_norm(a);
  const auto nb = max_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

// All integer points of the product of [lo_i, hi_i].
std::vector<Anchor> integer_points(const std::vector<std::int64_t>& lo,
                                   const std::vector<std::int64_t>& hi) {
  std::vector<Anchor> out;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return out;
  }
  Anchor a = lo;
  while (true) {
    out.push_back(a);
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (a[i] < hi[i]) {
        ++a[i];
        break;
      }
      a[i] = lo[i];
      if (i == 0) return out;
    }
    if (a.empty()) return out;
  }
}

std::string anchor_text(const Anchor& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

Rational aggregate(Aggregate mode, const Rational& acc, const Rational& v) {
  return mode == Aggregate::kSup ? std::max(acc, v) : std::min(acc, v);
}

}  // namespace

Point to_point(const Anchor& anchor) {
  Point p;
  p.reserve(anchor.size());
  for (auto c : anchor) p.emplace_back(static_cast<long>(c));
  return p;
}

std::vector<Anchor> lattice_points(std::size_t dim, std::int64_t radius) {
  if (radius < 0) return {};
  auto points = integer_points(std::vector<std::int64_t>(dim, -radius),
                               std::vector<std::int64_t>(dim, radius));
  std::sort(points.begin(), points.end(), anchor_before);
  return points;
}

LocallyFiniteFamily::LocallyFiniteFamily(std::size_t dim, bool positive)
    : LocallyFiniteFamily(dim, positive, Rational(2), {}) {}

LocallyFiniteFamily::LocallyFiniteFamily(std::size_t dim, bool positive, Rational reach,
                                         FamilyMetadata metadata)
    : dim_(dim), positive_(positive), reach_(std::move(reach)), metadata_(metadata) {
  if (reach_.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "family reach must be positive");
}

LocallyFiniteFamily LocallyFiniteFamily::from_members(std::size_t dim,
                                                      std::vector<BoxedPA> members,
                                                      bool positive, Rational reach,
                                                      FamilyMetadata metadata) {
  LocallyFiniteFamily family(dim, positive, std::move(reach), metadata);
  for (const auto& m : members) family.check_member(m);
  std::stable_sort(members.begin(), members.end(), [](const BoxedPA& a, const BoxedPA& b) {
    return anchor_before(a.anchor, b.anchor);
  });
  family.members_ = std::move(members);
  return family;
}

LocallyFiniteFamily LocallyFiniteFamily::generated(std::size_t dim, Generator generator,
                                                   bool positive, Rational reach,
                                                   FamilyMetadata metadata) {
  LocallyFiniteFamily family(dim, positive, std::move(reach), metadata);
  family.state_ = std::make_shared<GeneratorState>();
  family.state_->generator = std::move(generator);
  return family;
}

void LocallyFiniteFamily::check_member(const BoxedPA& m) const {
  require_same_dim(dim_, m.expr.dim(), "family member expression");
  require_same_dim(dim_, m.support.dim(), "family member support");
  require_same_dim(dim_, m.anchor.size(), "family member anchor");
  if (!SolidBox(to_point(m.anchor), reach_).contains(m.support)) {
    throw Error(ErrorKind::kInvalidArgument,
                "support of member at " + anchor_text(m.anchor) + " leaves anchor + " +
                    reach_.to_string() + "B");
  }
}

std::vector<BoxedPA> LocallyFiniteFamily::generated_in_range(
    const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const {
  auto anchors = integer_points(lo, hi);
  std::sort(anchors.begin(), anchors.end(), anchor_before);
  std::vector<BoxedPA> out;
  out.reserve(anchors.size());
  for (const auto& a : anchors) {
    {
      std::lock_guard lock(state_->mutex);
      auto it = state_->cache.find(a);
      if (it != state_->cache.end()) {
        out.push_back(it->second);
        continue;
      }
    }
    BoxedPA member = state_->generator(a);
    if (member.anchor != a) throw Error(ErrorKind::kInternalInconsistency, "generator moved an anchor");
    check_member(member);
    std::lock_guard lock(state_->mutex);
    out.push_back(state_->cache.emplace(a, std::move(member)).first->second);
  }
  return out;
}

std::vector<BoxedPA> LocallyFiniteFamily::members_meeting(const SolidBox& box) const {
  require_same_dim(dim_, box.dim(), "family query box");
  std::vector<BoxedPA> out;
  if (state_) {
    std::vector<std::int64_t> lo(dim_), hi(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = (box.lower(i) - reach_).ceil();
      hi[i] = (box.upper(i) + reach_).floor();
    }
    for (auto& m : generated_in_range(lo, hi)) {
      if (m.support.intersects(box)) out.push_back(std::move(m));
    }
    return out;
  }
  for (const auto& m : members_) {
    if (m.support.intersects(box)) out.push_back(m);
  }
  return out;
}

std::vector<BoxedPA> LocallyFiniteFamily::members_containing(const Point& x) const {
  require_same_dim(dim_, x.size(), "family query point");
  std::vector<BoxedPA> out;
  if (state_) {
    std::vector<std::int64_t> lo(dim_), hi(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = (x[i] - reach_).ceil();
      hi[i] = (x[i] + reach_).floor();
    }
    for (auto& m : generated_in_range(lo, hi)) {
      if (m.support.contains(x)) out.push_back(std::move(m));
    }
    return out;
  }
  for (const auto& m : members_) {
    if (m.support.contains(x)) out.push_back(m);
  }
  return out;
}

std::vector<BoxedPA> LocallyFiniteFamily::members_within(std::int64_t radius) const {
  if (state_) {
    return generated_in_range(std::vector<std::int64_t>(dim_, -radius),
                              std::vector<std::int64_t>(dim_, radius));
  }
  std::vector<BoxedPA> out;
  for (const auto& m : members_) {
    if (max_norm(m.anchor) <= radius) out.push_back(m);
  }
  return out;
}

MinMaxExpr bump(const Point& center, const Rational& inner, const Rational& outer,
                const Rational& height) {
  if (inner.sign() <= 0 || inner >= outer) {
    throw Error(ErrorKind::kBadRadii, "need 0 < inner < outer, got inner " + inner.to_string() +
                                          ", outer " + outer.to_string());
  }
  if (height.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "bump height must be positive");
  const std::size_t m = center.size();
  const Rational s = height / (outer - inner);
  MinMaxExpr::Clause top{AffineFunction::constant(m, height)};
  for (std::size_t i = 0; i < m; ++i) {
    // s * (outer - (x_i - c_i)) and s * (outer + (x_i - c_i))
    top.push_back(AffineFunction::coordinate(m, i, -s, s * (outer + center[i])));
    top.push_back(AffineFunction::coordinate(m, i, s, s * (outer - center[i])));
  }
  return MinMaxExpr(m, {std::move(top), {AffineFunction::constant(m, 0)}});
}

LPAFunction sup_family(LocallyFiniteFamily family) {
  return LPAFunction{Aggregate::kSup, std::move(family), std::nullopt, std::nullopt};
}

LPAFunction inf_family(LocallyFiniteFamily family) {
  return LPAFunction{Aggregate::kInf, std::move(family), std::nullopt, std::nullopt};
}

Rational eval_lpa(const LPAFunction& h, const Point& x) {
  Rational value(0);
  for (const auto& m : h.family.members_containing(x)) {
    value = aggregate(h.mode, value, eval(m.expr, x));
  }
  if (h.base) value += eval(*h.base, x);
  if (h.subtracted) {
    Rational sub(0);
    for (const auto& m : h.subtracted->members_containing(x)) sub = std::max(sub, eval(m.expr, x));
    value -= sub;
  }
  return value;
}

MinMaxExpr restrict_to_box(const LPAFunction& h, std::int64_t n, const Limits& limits) {
  if (n <= 0) throw Error(ErrorKind::kInvalidArgument, "restriction radius must be positive");
  const std::size_t m = h.family.dim();
  const SolidBox box = SolidBox::omega(m, Rational(static_cast<long>(n)));
  MinMaxExpr acc = MinMaxExpr::constant(m, 0);
  for (const auto& member : h.family.members_meeting(box)) {
    acc = h.mode == Aggregate::kSup ? join(acc, member.expr) : meet(acc, member.expr);
  }
  if (h.base) acc = add(acc, *h.base);
  if (h.subtracted) {
    const MinMaxExpr sub = restrict_to_box(sup_family(*h.subtracted), n, limits);
    acc = difference_on_box(acc, sub, box, limits);
  }
  return acc;
}

LocallyFiniteFamily tile_decompose(const MinMaxExpr& f, const TileOptions& options) {
  const std::size_t m = f.dim();
  FamilyMetadata metadata;
  if (options.positive_check) {
    const bool global = std::any_of(f.clauses().begin(), f.clauses().end(), [](const auto& c) {
      return std::all_of(c.begin(), c.end(),
                         [](const AffineFunction& a) { return a.is_constant() && a.b.sign() >= 0; });
    });
    if (global) {
      metadata.globally_nonnegative = true;
    } else {
      const auto [lo, hi] = bound_on_box(
          f, SolidBox::omega(m, Rational(static_cast<long>(options.certify_radius))),
          options.limits);
      if (lo.sign() < 0) {
        throw Error(ErrorKind::kNotNonnegative,
                    "minimum " + lo.to_string() + " on Omega_" +
                        std::to_string(options.certify_radius));
      }
      metadata.certified_radius = options.certify_radius;
    }
  }
  const Limits limits = options.limits;
  auto generator = [f, limits](const Anchor& c) {
    const Point center = to_point(c);
    const Rational peak = bound_on_box(f, SolidBox(center, 1), limits).second + 1;
    // f may be negative on K when the check is off; the bump still needs a
    // positive height.
    const Rational height = peak.sign() > 0 ? peak : Rational(1);
    return BoxedPA{meet(f, bump(center, 1, 2, height)), SolidBox(center, 2), c};
  };
  return LocallyFiniteFamily::generated(m, std::move(generator), options.positive_check,
                                        Rational(2), metadata);
}

std::size_t verify_locally_finite(const LocallyFiniteFamily& family, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::kInvalidArgument, "radius must be positive");
  return family
      .members_meeting(SolidBox::omega(family.dim(), Rational(static_cast<long>(n))))
      .size();
}

LpaPairs lpa_characteristic_pairs(const LPAFunction& h, std::int64_t n, const Limits& limits) {
  if (n <= 0) throw Error(ErrorKind::kInvalidArgument, "radius must be positive");
  const std::size_t m = h.family.dim();
  std::vector<AffineFunction> catalog;
  std::map<AffineFunction, std::size_t> ids;
  std::optional<CellComplex> complex;
  for (std::int64_t k = 1; k <= n; ++k) {
    const MinMaxExpr e = restrict_to_box(h, k, limits);
    complex = build_complex(e, SolidBox::omega(m, Rational(static_cast<long>(k))), limits);
    for (const auto& pair : characteristic_pairs(*complex)) {
      if (ids.emplace(pair.component, catalog.size()).second) catalog.push_back(pair.component);
    }
  }
  auto pairs = characteristic_pairs(*complex);
  std::vector<std::size_t> pair_ids;
  for (const auto& p : pairs) pair_ids.push_back(ids.at(p.component));
  return LpaPairs{std::move(catalog), std::move(pairs), std::move(pair_ids), std::move(*complex)};
}

bool vanishes_outside_support(const BoxedPA& member, const Limits& limits) {
  const SolidBox& s = member.support;
  const SolidBox around(s.center(), s.radius() + 1);
  const CellComplex complex = build_complex(member.expr, around, limits);
  for (std::size_t k = 0; k < complex.cells.size(); ++k) {
    bool outside = false;
    for (std::size_t i = 0; i < s.dim() && !outside; ++i) {
      const auto [lo, hi] = coordinate_range(complex.cells[k], i);
      outside = lo < s.lower(i) || hi > s.upper(i);
    }
    if (outside && !complex.components[complex.assignment[k]].is_zero()) return false;
  }
  return true;
}

LocallyFiniteFamily pairwise_closure(const LocallyFiniteFamily& family, LatticeOp op) {
  if (family.is_generated()) {
    throw Error(ErrorKind::kInvalidArgument, "pairwise closure needs a listed family");
  }
  if (op == LatticeOp::kMeet && !family.positive()) {
    throw Error(ErrorKind::kInvalidArgument, "meet supports need a positive family");
  }
  const auto& members = family.listed_members();
  const std::size_t m = family.dim();
  std::vector<BoxedPA> derived;
  Rational reach = family.reach();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& a = members[i];
      const auto& b = members[j];
      if (op == LatticeOp::kJoin) {
        Point center(m);
        Rational radius(0);
        for (std::size_t d = 0; d < m; ++d) {
          const Rational lo = std::min(a.support.lower(d), b.support.lower(d));
          const Rational hi = std::max(a.support.upper(d), b.support.upper(d));
          center[d] = (lo + hi) / 2;
          radius = std::max(radius, (hi - lo) / 2);
        }
        derived.push_back(BoxedPA{join(a.expr, b.expr), SolidBox(center, radius), a.anchor});
      } else {
        const auto& small = a.support.radius() <= b.support.radius() ? a : b;
        derived.push_back(BoxedPA{meet(a.expr, b.expr), small.support, small.anchor});
      }
      const auto& last = derived.back();
      const Point anchor = to_point(last.anchor);
      for (std::size_t d = 0; d < m; ++d) {
        reach = std::max({reach, (last.support.upper(d) - anchor[d]).abs(),
                          (last.support.lower(d) - anchor[d]).abs()});
      }
    }
  }
  return LocallyFiniteFamily::from_members(m, std::move(derived), family.positive(), reach);
}

}  // namespace pa
