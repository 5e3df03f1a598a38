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

#include "pa/expr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "box_lp.hpp"
#include "pa/errors.hpp"

namespace pa {
namespace {

using Clause = MinMaxExpr::Clause;

Clause dedup_members(const Clause& clause) {
  Clause out;
  out.reserve(clause.size());
  std::set<AffineFunction> seen;
  for (const auto& f : clause) {
    if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

Clause sorted_copy(Clause clause) {
  std::sort(clause.begin(), clause.end());
  return clause;
}

// Keeps, for every gradient, only the member with the smallest offset; the
// others are >= it on all of R^m and never attain the min.
Clause drop_parallel_dominated(const Clause& clause) {
  std::map<std::vector<Rational>, Rational> best;
  for (const auto& f : clause) {
    auto [it, inserted] = best.emplace(f.v, f.b);
    if (!inserted && f.b < it->second) it->second = f.b;
  }
  Clause out;
  out.reserve(best.size());
  for (const auto& f : clause) {
    auto it = best.find(f.v);
    if (it != best.end() && it->second == f.b) {
      out.push_back(f);
      best.erase(it);
    }
  }
  return out;
}

// min(lower) <= min(upper) on R^m whenever every member of `upper` has a
// parallel member of `lower` with no larger offset.
bool absorbs_globally(const Clause& lower, const Clause& upper) {
  for (const auto& u : upper) {
    const bool covered = std::any_of(lower.begin(), lower.end(), [&](const AffineFunction& l) {
      return l.v == u.v && l.b <= u.b;
    });
    if (!covered) return false;
  }
  return true;
}

constexpr std::size_t kAbsorptionCap = 20000;

std::vector<Clause> simplify_globally(std::vector<Clause> clauses) {
  std::vector<Clause> normalized;
  normalized.reserve(clauses.size());
  std::set<Clause> seen;
  for (auto& c : clauses) {
    Clause d = drop_parallel_dominated(dedup_members(c));
    if (seen.insert(sorted_copy(d)).second) normalized.push_back(std::move(d));
  }
  if (normalized.size() > kAbsorptionCap) return normalized;

  std::vector<std::size_t> order(normalized.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return normalized[a].size() < normalized[b].size();
  });
  std::vector<bool> keep(normalized.size(), true);
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    for (std::size_t k : kept) {
      if (absorbs_globally(normalized[idx], normalized[k])) {
        keep[idx] = false;
        break;
      }
    }
    if (keep[idx]) kept.push_back(idx);
  }
  std::vector<Clause> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (keep[i]) out.push_back(std::move(normalized[i]));
  }
  return out;
}

void require_same_dim(const MinMaxExpr& a, const MinMaxExpr& b, const char* what) {
  pa::require_same_dim(a.dim(), b.dim(), what);
}

// max over x in box of (min over p in lower of p(x)) - q(x).
Rational max_gap(const Clause& lower, const AffineFunction& q, const SolidBox& box) {
  const std::size_t m = box.dim();
  // Variables (x, t); maximize t subject to (p - q)(x) - t >= 0.
  detail::Bounds bounds = detail::Bounds::of(box);
  Rational t_lo, t_hi;
  bool first = true;
  std::vector<AffineFunction> constraints;
  constraints.reserve(lower.size());
  for (const auto& p : lower) {
    AffineFunction diff = p - q;
    const Rational lo = min_over_box(diff, box);
    const Rational hi = max_over_box(diff, box);
    if (first || lo < t_lo) t_lo = lo;
    if (first || hi < t_hi) t_hi = hi;
    first = false;
    diff.v.push_back(Rational(-1));
    constraints.push_back(std::move(diff));
  }
  bounds.lo.push_back(t_lo);
  bounds.hi.push_back(t_hi);
  const auto objective = AffineFunction::coordinate(m + 1, m);
  auto best = detail::maximize(objective, constraints, bounds);
  if (!best) throw Error(ErrorKind::kInternalInconsistency, "clause gap LP infeasible");
  return best->value;
}

// min C_lower <= min C_upper on the whole box.
bool clause_dominated_on_box(const Clause& lower, const Clause& upper, const SolidBox& box) {
  bool cheap = true;
  for (const auto& q : upper) {
    const bool covered = std::any_of(lower.begin(), lower.end(), [&](const AffineFunction& p) {
      return max_over_box(p - q, box).sign() <= 0;
    });
    if (!covered) {
      cheap = false;
      break;
    }
  }
  if (cheap) return true;
  for (const auto& q : upper) {
    if (max_gap(lower, q, box).sign() > 0) return false;
  }
  return true;
}

}  // namespace

MinMaxExpr::MinMaxExpr(std::size_t dim, std::vector<Clause> clauses) : dim_(dim) {
  if (clauses.empty()) throw Error(ErrorKind::kInvalidArgument, "expression needs a clause");
  std::set<Clause> seen;
  for (auto& c : clauses) {
    if (c.empty()) throw Error(ErrorKind::kInvalidArgument, "clauses must be non-empty");
    for (const auto& f : c) pa::require_same_dim(f.dim(), dim, "expression member");
    Clause d = dedup_members(c);
    if (seen.insert(sorted_copy(d)).second) clauses_.push_back(std::move(d));
  }
}

MinMaxExpr MinMaxExpr::from_affine(AffineFunction f) {
  const std::size_t m = f.dim();
  return MinMaxExpr(m, {{std::move(f)}});
}

MinMaxExpr MinMaxExpr::constant(std::size_t dim, Rational value) {
  return from_affine(AffineFunction::constant(dim, std::move(value)));
}

std::size_t MinMaxExpr::member_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses_) n += c.size();
  return n;
}

MinMaxExpr from_affine(AffineFunction f) { return MinMaxExpr::from_affine(std::move(f)); }

Rational eval(const MinMaxExpr& e, const Point& x) {
  pa::require_same_dim(e.dim(), x.size(), "eval");
  Rational best;
  bool have_best = false;
  for (const auto& clause : e.clauses()) {
    Rational low = eval_affine(clause.front(), x);
    for (std::size_t i = 1; i < clause.size(); ++i) {
      Rational value = eval_affine(clause[i], x);
      if (value < low) low = std::move(value);
    }
    if (!have_best || low > best) {
      best = std::move(low);
      have_best = true;
    }
  }
  return best;
}

MinMaxExpr join(const MinMaxExpr& e1, const MinMaxExpr& e2) {
  require_same_dim(e1, e2, "join");
  std::vector<Clause> clauses = e1.clauses();
  clauses.insert(clauses.end(), e2.clauses().begin(), e2.clauses().end());
  return MinMaxExpr(e1.dim(), std::move(clauses));
}

MinMaxExpr meet(const MinMaxExpr& e1, const MinMaxExpr& e2) {
  require_same_dim(e1, e2, "meet");
  std::vector<Clause> clauses;
  clauses.reserve(e1.clauses().size() * e2.clauses().size());
  for (const auto& c1 : e1.clauses()) {
    for (const auto& c2 : e2.clauses()) {
      Clause c = c1;
      c.insert(c.end(), c2.begin(), c2.end());
      clauses.push_back(std::move(c));
    }
  }
  return MinMaxExpr(e1.dim(), std::move(clauses));
}

MinMaxExpr add(const MinMaxExpr& e1, const MinMaxExpr& e2) {
  require_same_dim(e1, e2, "add");
  std::vector<Clause> clauses;
  clauses.reserve(e1.clauses().size() * e2.clauses().size());
  for (const auto& c1 : e1.clauses()) {
    for (const auto& c2 : e2.clauses()) {
      Clause c;
      c.reserve(c1.size() * c2.size());
      for (const auto& a : c1) {
        for (const auto& b : c2) c.push_back(a + b);
      }
      clauses.push_back(std::move(c));
    }
  }
  return MinMaxExpr(e1.dim(), std::move(clauses));
}

MinMaxExpr negate(const MinMaxExpr& e, const Limits& limits) {
  std::vector<Clause> acc(1);
  for (const auto& clause : e.clauses()) {
    const std::size_t produced = acc.size() * clause.size();
    if (produced > limits.clause_budget) {
      throw Error(ErrorKind::kExpressionTooLarge,
                  "negate would expand to " + std::to_string(produced) + " clauses (budget " +
                      std::to_string(limits.clause_budget) + ")");
    }
    std::vector<Clause> next;
    next.reserve(produced);
    for (const auto& partial : acc) {
      for (const auto& f : clause) {
        Clause c = partial;
        c.push_back(-f);
        next.push_back(std::move(c));
      }
    }
    acc = simplify_globally(std::move(next));
  }
  return MinMaxExpr(e.dim(), std::move(acc));
}

MinMaxExpr scale(const MinMaxExpr& e, const Rational& lambda, const Limits& limits) {
  if (lambda.is_zero()) return MinMaxExpr::constant(e.dim(), 0);
  if (lambda.sign() < 0) return scale(negate(e, limits), -lambda, limits);
  std::vector<Clause> clauses = e.clauses();
  for (auto& c : clauses) {
    for (auto& f : c) f *= lambda;
  }
  return MinMaxExpr(e.dim(), std::move(clauses));
}

MinMaxExpr prune(const MinMaxExpr& e, const SolidBox& box) {
  pa::require_same_dim(e.dim(), box.dim(), "prune");
  std::vector<Clause> reduced;
  reduced.reserve(e.clauses().size());
  for (const auto& clause : e.clauses()) {
    Clause kept;
    for (std::size_t i = 0; i < clause.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < clause.size() && !dominated; ++j) {
        dominated = j != i && max_over_box(clause[j] - clause[i], box).sign() <= 0;
      }
      if (!dominated) kept.push_back(clause[i]);
    }
    reduced.push_back(std::move(kept));
  }
  std::vector<bool> alive(reduced.size(), true);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j == i || !alive[j]) continue;
      if (clause_dominated_on_box(reduced[i], reduced[j], box)) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<Clause> out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (alive[i]) out.push_back(std::move(reduced[i]));
  }
  return MinMaxExpr(e.dim(), std::move(out));
}

}  // namespace pa
