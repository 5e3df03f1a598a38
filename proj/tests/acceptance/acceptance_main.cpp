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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pa/approx.hpp"
#include "pa/cells.hpp"
#include "pa/expr.hpp"
#include "pa/lpa.hpp"

namespace {

using namespace pa;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational coefficient(long lo = -10, long hi = 10) {
    const long d = integer(1, 3);
    return Rational(integer(lo * d, hi * d), d);
  }

  Rational positive(long hi_num, long den) { return Rational(integer(1, hi_num), den); }

  Point point(const SolidBox& box, long denominator = 101) {
    Point p(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) {
      const long lo = (box.lower(i) * Rational(denominator)).ceil();
      const long hi = (box.upper(i) * Rational(denominator)).floor();
      p[i] = Rational(integer(lo, hi), denominator);
    }
    return p;
  }

  MinMaxExpr expr(std::size_t m, std::size_t max_members = 6) {
    const auto members = static_cast<std::size_t>(integer(1, static_cast<long>(max_members)));
    const auto clauses = static_cast<std::size_t>(integer(1, static_cast<long>(members)));
    std::vector<MinMaxExpr::Clause> out(clauses);
    for (std::size_t k = 0; k < members; ++k) {
      AffineFunction f = AffineFunction::constant(m, coefficient());
      for (auto& c : f.v) c = coefficient();
      out[k < clauses ? k : static_cast<std::size_t>(integer(0, static_cast<long>(clauses) - 1))]
          .push_back(std::move(f));
    }
    return MinMaxExpr(m, std::move(out));
  }

  std::size_t dim() { return static_cast<std::size_t>(integer(1, 3)); }

 private:
  std::mt19937_64 gen_;
};

SolidBox omega(std::size_t m, long n) { return SolidBox::omega(m, Rational(n)); }

AffineFunction lin(long c, long b) { return AffineFunction::coordinate(1, 0, c, b); }

Limits wide_limits() {
  Limits l;
  l.hyperplane_limit = 1024;
  return l;
}

// Criterion 1: the three-component example on Omega_2.
void example_one(Outcome& o) {
  const MinMaxExpr f(1, {{lin(1, 0), AffineFunction::constant(1, 1)},
                         {lin(-1, 0), AffineFunction::constant(1, 1)}});
  const auto box = omega(1, 2);
  const auto complex = build_complex(f, box);
  std::vector<std::pair<Rational, Rational>> cells;
  for (const auto& c : complex.cells) cells.push_back(coordinate_range(c, 0));
  std::sort(cells.begin(), cells.end());
  const std::vector<std::pair<Rational, Rational>> expected_cells{{-2, -1}, {-1, 0}, {0, 1}, {1, 2}};
  o.require(cells == expected_cells, "cells are (-2,-1),(-1,0),(0,1),(1,2)");

  std::map<AffineFunction, std::vector<std::pair<Rational, Rational>>> regions;
  for (const auto& pair : characteristic_pairs(complex)) {
    auto& r = regions[pair.component];
    for (const auto k : pair.region_cells) r.push_back(coordinate_range(complex.cells[k], 0));
    std::sort(r.begin(), r.end());
  }
  using Regions = std::vector<std::pair<Rational, Rational>>;
  o.require(regions.size() == 3, "exactly three components");
  o.require(regions[lin(1, 0)] == Regions{{0, 1}}, "t holds on [0,1]");
  o.require(regions[lin(-1, 0)] == Regions{{-1, 0}}, "-t holds on [-1,0]");
  o.require(regions[AffineFunction::constant(1, 1)] == Regions{{-2, -1}, {1, 2}},
            "1 holds on [-2,-1] and [1,2]");
  o.detail << complex.cells.size() << " cells, " << regions.size() << " pairs";
}

// Criterion 2: pointwise lattice contracts.
void lattice_laws(Outcome& o) {
  Random rng(2);
  std::size_t checks = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = rng.dim();
    const auto e1 = rng.expr(m);
    const auto e2 = rng.expr(m);
    const Rational lambda = rng.coefficient();
    const auto j = join(e1, e2);
    const auto mt = meet(e1, e2);
    const auto s = add(e1, e2);
    const auto n = negate(e1);
    const auto sc = scale(e1, lambda);
    for (int i = 0; i < 50; ++i) {
      const auto x = rng.point(omega(m, 10));
      const Rational a = eval(e1, x);
      const Rational b = eval(e2, x);
      o.require(eval(j, x) == std::max(a, b), "join");
      o.require(eval(mt, x) == std::min(a, b), "meet");
      o.require(eval(s, x) == a + b, "add");
      o.require(eval(n, x) == -a, "negate");
      o.require(eval(sc, x) == lambda * a, "scale");
      checks += 5;
    }
  }
  o.detail << checks << " exact checks";
}

// Criterion 3: the max-min form rebuilt from characteristic data.
void round_trip(Outcome& o) {
  Random rng(3);
  std::size_t cells = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = rng.dim();
    const auto e = rng.expr(m);
    const auto box = omega(m, 5);
    const auto complex = build_complex(e, box, wide_limits());
    cells += complex.cells.size();
    o.require(semantic_equal(max_min_from_pairs(complex), e, box, wide_limits()),
              "round trip of trial " + std::to_string(trial));
  }
  o.detail << "100 expressions, " << cells << " cells";
}

// Criterion 4: bump sandwich and zero cells outside the outer box.
void bump_contract(Outcome& o) {
  Random rng(4);
  std::size_t zero_cells = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = rng.dim();
    Point center(m);
    for (auto& c : center) c = rng.coefficient(-5, 5);
    const Rational inner = rng.positive(8, 4);
    const Rational outer = inner + rng.positive(8, 4);
    const Rational height = rng.positive(20, 3);
    const auto b = bump(center, inner, outer, height);
    const SolidBox in_box(center, inner);
    const SolidBox out_box(center, outer);
    const SolidBox around(center, outer + 1);
    for (int i = 0; i < 200; ++i) {
      // Half the samples land in the outer box so every regime is exercised.
      const auto x = rng.point(i % 2 ? out_box : around);
      const Rational v = eval(b, x);
      o.require(Rational(0) <= v && v <= height, "0 <= bump <= height");
      if (in_box.contains(x)) o.require(v == height, "height on the inner box");
      if (!out_box.contains(x)) o.require(v == Rational(0), "zero outside the outer box");
    }
    const auto complex = build_complex(b, around);
    for (std::size_t k = 0; k < complex.cells.size(); ++k) {
      bool outside = false;
      for (std::size_t i = 0; i < m; ++i) {
        const auto [lo, hi] = coordinate_range(complex.cells[k], i);
        outside = outside || lo >= out_box.upper(i) || hi <= out_box.lower(i);
      }
      if (outside) {
        ++zero_cells;
        o.require(complex.components[complex.assignment[k]].is_zero(), "outside cell is zero");
      }
    }
  }
  o.detail << "50 bumps, " << zero_cells << " outside cells checked";
}

// Criterion 5: tiling decomposition.
void tiling(Outcome& o) {
  Random rng(5);
  const MinMaxExpr abs(1, {{lin(1, 0)}, {lin(-1, 0)}});
  // 1 - |x|_inf = min over i of (1 - x_i, 1 + x_i).
  MinMaxExpr::Clause ramp;
  for (std::size_t i = 0; i < 2; ++i) {
    ramp.push_back(AffineFunction::coordinate(2, i, 1, 1));
    ramp.push_back(AffineFunction::coordinate(2, i, -1, 1));
  }
  const std::vector<MinMaxExpr> fs{
      MinMaxExpr(1, {{lin(1, 0), AffineFunction::constant(1, 1)},
                     {lin(-1, 0), AffineFunction::constant(1, 1)}}),
      meet(abs, MinMaxExpr::constant(1, 3)),
      MinMaxExpr(2, {{AffineFunction::constant(2, 0)}, ramp}),
  };
  for (const auto& f : fs) {
    const std::size_t m = f.dim();
    const auto family = tile_decompose(f);
    const auto h = sup_family(family);
    for (int i = 0; i < 500; ++i) {
      const auto x = rng.point(omega(m, 3));
      const Rational fx = eval(f, x);
      o.require(eval_lpa(h, x) == fx, "sup equals f");
      for (const auto& member : family.members_containing(x)) {
        const Rational v = eval(member.expr, x);
        o.require(Rational(0) <= v && v <= fx, "0 <= member <= f");
      }
    }
    // Anchors c with c + 2B meeting Omega_1: |c_i| <= 3 on every axis.
    std::size_t geometry = 1;
    for (std::size_t i = 0; i < m; ++i) geometry *= 7;
    const std::size_t counted = verify_locally_finite(family, 1);
    o.require(counted == geometry, "locally finite count");
    o.detail << "m=" << m << " count " << counted << "; ";
  }
}

// Criterion 6: uniform approximation of t^2.
void uniform_density(Outcome& o) {
  const auto f = make_oracle("quadratic", 1);
  const auto r = uniform_approx(f, Rational(1, 4), 1);
  Random rng(6);
  Rational worst;
  for (int i = 0; i < 500; ++i) {
    const auto x = rng.point(omega(1, 2), 997);
    worst = std::max(worst, (f.evaluate(x) - eval_lpa(r.h, x)).abs());
  }
  o.require(worst <= Rational(1, 4), "|f - h| <= 1/4 on Omega_2");
  o.require(r.report.max_observed_error <= Rational(1, 4), "report error <= 1/4");
  o.require(r.report.certified_bound.has_value() && *r.report.certified_bound <= Rational(1, 4),
            "certified bound <= 1/4");
  o.detail << "max error " << worst.to_decimal(6) << ", certified "
           << (r.report.certified_bound ? r.report.certified_bound->to_string() : "none");
}

// Criterion 7: increasing under-approximations of |t|.
void monotone_density(Outcome& o) {
  const auto f = make_oracle("abs", 1);
  const auto seq = monotone_under_approx(f, 5, wide_limits());
  o.require(seq.terms.size() == 5, "five terms");
  const auto box = omega(1, 6);
  for (std::size_t k = 0; k + 1 < seq.terms.size(); ++k) {
    const auto [lo, hi] = bound_of_difference(seq.terms[k + 1], seq.terms[k], box, wide_limits());
    o.require(lo.sign() >= 0, "h_k <= h_{k+1} on Omega_6");
  }
  Random rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = rng.point(omega(1, 8));
    for (const auto& h : seq.terms) o.require(eval(h, x) <= f.evaluate(x), "h_k <= f");
  }
  const Rational gap = f.evaluate({1}) - eval(seq.terms.back(), {1});
  o.require(gap <= Rational(2, 32), "f(1) - h_5(1) <= 2^-4");
  o.detail << "f(1) - h_5(1) = " << gap.to_string();
}

// Criterion 8: order approximation of f(t) = t.
void order_limit(Outcome& o) {
  const auto f = make_oracle("poly:0,1", 1);
  const auto seq = order_approx(f, 4, wide_limits());
  Random rng(8);
  Rational worst;
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(omega(1, 2));
    Rational previous;
    for (std::size_t k = 0; k < seq.terms.size(); ++k) {
      const Rational err = (f.evaluate(x) - eval(seq.terms[k], x)).abs();
      if (k > 0) o.require(err <= previous, "error non-increasing in k");
      previous = err;
    }
    worst = std::max(worst, previous);
  }
  o.require(worst <= Rational(4, 16), "error <= 4 * 2^-4 at k = 4");
  o.detail << "max error at k=4: " << worst.to_string();
}

// Criterion 9: pairwise closures of a random positive family.
void closure(Outcome& o) {
  Random rng(9);
  std::vector<BoxedPA> members;
  for (int k = 0; k < 20; ++k) {
    const Anchor a{rng.integer(-6, 6), rng.integer(-6, 6)};
    const Rational inner = rng.positive(3, 4);
    const Rational outer = inner + rng.positive(4, 4);
    members.push_back(BoxedPA{bump(to_point(a), inner, outer, rng.positive(9, 2)),
                              SolidBox(to_point(a), outer), a});
  }
  const auto family = LocallyFiniteFamily::from_members(2, members, true);
  for (const auto op : {LatticeOp::kJoin, LatticeOp::kMeet}) {
    const auto closed = pairwise_closure(family, op);
    o.require(closed.listed_members().size() == 190, "190 pairwise members");
    for (const auto& m : closed.listed_members()) {
      o.require(SolidBox(to_point(m.anchor), closed.reach()).contains(m.support),
                "support within anchor + reach B");
      for (int i = 0; i < 10; ++i) {
        const auto x = rng.point(SolidBox(m.support.center(), m.support.radius() + 1));
        const Rational v = eval(m.expr, x);
        o.require(v.sign() >= 0, "member nonnegative");
        if (!m.support.contains(x)) o.require(v.is_zero(), "member vanishes off its support");
      }
    }
    for (long n = 1; n <= 10; ++n) {
      std::size_t expected = 0;
      for (const auto& m : closed.listed_members()) {
        bool meets = true;
        for (std::size_t i = 0; i < 2; ++i) {
          meets = meets && m.support.lower(i) <= Rational(n) && Rational(-n) <= m.support.upper(i);
        }
        expected += meets ? 1 : 0;
      }
      o.require(verify_locally_finite(closed, n) == expected, "count matches support boxes");
    }
    o.detail << (op == LatticeOp::kJoin ? "join" : "meet") << " reach " << closed.reach().to_string()
             << "; ";
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example one pairs and cells", 1, example_one},
      {2, "lattice laws", 30, lattice_laws},
      {3, "max-min round trip", 120, round_trip},
      {4, "bump contract", 60, bump_contract},
      {5, "tiling decomposition", 60, tiling},
      {6, "uniform density", 120, uniform_density},
      {7, "monotone order density", 120, monotone_density},
      {8, "order-limit decomposition", 60, order_limit},
      {9, "locally finite closure", 30, closure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    if (!in_time) o.detail << " over the " << c.budget_seconds << " s budget";
    const bool ok = o.passed && in_time;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") "
              << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s: " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
