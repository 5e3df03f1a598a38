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

#include <gtest/gtest.h>

#include <algorithm>

#include "pa/cells.hpp"
#include "pa/expr.hpp"
#include "support.hpp"

namespace pa {
namespace {

using test::abs1;
using test::example1;
using test::expr1;
using test::lin;
using test::q;
using test::throws_kind;

TEST(FromAffine, Examples) {
  const auto t = from_affine(lin(1));
  EXPECT_EQ(t.clauses(), (std::vector<MinMaxExpr::Clause>{{lin(1)}}));
  EXPECT_EQ(eval(t, {5}), Rational(5));
  EXPECT_EQ(eval(from_affine(lin(0, 1)), {q("-7/3")}), Rational(1));
  const auto f = from_affine(test::aff({1, 2}, 3));
  EXPECT_EQ(f.member_count(), 1u);
  EXPECT_EQ(eval(f, {1, 1}), Rational(6));
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(example1(), {q("1/2")}), q("1/2"));
  EXPECT_EQ(eval(example1(), {2}), Rational(1));
  EXPECT_EQ(eval(abs1(), {-3}), Rational(3));
  EXPECT_TRUE(throws_kind([] { eval(abs1(), {1, 2}); }, ErrorKind::kDimensionMismatch));
}

TEST(Construction, RejectsEmptyAndMixedDimensions) {
  EXPECT_TRUE(throws_kind([] { MinMaxExpr(1, {}); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(throws_kind([] { MinMaxExpr(1, {{}}); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(throws_kind([] { MinMaxExpr(1, {{lin(1), test::aff({1, 1}, 0)}}); },
                          ErrorKind::kDimensionMismatch));
}

TEST(Construction, Deduplicates) {
  const auto e = expr1({{lin(1), lin(1)}, {lin(1), lin(1)}, {lin(2)}});
  EXPECT_EQ(e.clauses(), (std::vector<MinMaxExpr::Clause>{{lin(1)}, {lin(2)}}));
}

TEST(Join, Examples) {
  const auto j = join(from_affine(lin(1)), from_affine(lin(-1)));
  EXPECT_EQ(j.clauses(), abs1().clauses());
  EXPECT_EQ(eval(j, {-2}), Rational(2));
  EXPECT_EQ(eval(join(example1(), MinMaxExpr::constant(1, 0)), {q("1/2")}), q("1/2"));
  EXPECT_TRUE(throws_kind([] { join(abs1(), MinMaxExpr::constant(2, 0)); },
                          ErrorKind::kDimensionMismatch));
}

TEST(Meet, Examples) {
  const auto m = meet(abs1(), MinMaxExpr::constant(1, 1));
  EXPECT_EQ(m.clauses(), (std::vector<MinMaxExpr::Clause>{{lin(1), lin(0, 1)}, {lin(-1), lin(0, 1)}}));
  EXPECT_EQ(eval(m, {3}), Rational(1));
  EXPECT_EQ(eval(meet(from_affine(lin(1)), from_affine(lin(1, 1))), {0}), Rational(0));
}

TEST(Idempotence, JoinAndMeetWithSelf) {
  test::Rng rng(31);
  const auto e = rng.expr(2);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(test::omega(2, 10));
    EXPECT_EQ(eval(join(e, e), x), eval(e, x));
    EXPECT_EQ(eval(meet(e, e), x), eval(e, x));
  }
}

TEST(Add, Examples) {
  EXPECT_EQ(eval(add(abs1(), MinMaxExpr::constant(1, 1)), {-2}), Rational(3));
  const auto s = add(meet(from_affine(lin(1)), MinMaxExpr::constant(1, 1)),
                     meet(from_affine(lin(-1)), MinMaxExpr::constant(1, 1)));
  EXPECT_EQ(eval(s, {0}), Rational(0));
  test::Rng rng(32);
  const auto e = rng.expr(2);
  const auto zero = add(e, negate(e));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(eval(zero, rng.point(test::omega(2, 10))), Rational(0));
}

TEST(Negate, Examples) {
  const auto n = negate(from_affine(lin(1)));
  EXPECT_EQ(n.clauses(), (std::vector<MinMaxExpr::Clause>{{lin(-1)}}));
  EXPECT_EQ(eval(n, {4}), Rational(-4));
  const auto na = negate(abs1());
  ASSERT_EQ(na.clauses().size(), 1u);
  auto members = na.clauses()[0];
  std::sort(members.begin(), members.end());
  EXPECT_EQ(members, (MinMaxExpr::Clause{lin(-1), lin(1)}));
  EXPECT_EQ(eval(na, {2}), Rational(-2));
  test::Rng rng(33);
  const auto e = rng.expr(3);
  const auto back = negate(negate(e));
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(test::omega(3, 10));
    EXPECT_EQ(eval(back, x), eval(e, x));
  }
}

TEST(Negate, ClauseBudget) {
  // Ten clauses of three members expand to 3^10 choice functions.
  test::Rng rng(34);
  std::vector<MinMaxExpr::Clause> clauses;
  for (int c = 0; c < 10; ++c) clauses.push_back({rng.affine(3), rng.affine(3), rng.affine(3)});
  const MinMaxExpr e(3, clauses);
  Limits small;
  small.clause_budget = 50;
  EXPECT_TRUE(throws_kind([&] { negate(e, small); }, ErrorKind::kExpressionTooLarge));
  EXPECT_TRUE(throws_kind([&] { scale(e, -1, small); }, ErrorKind::kExpressionTooLarge));
}

TEST(Scale, Examples) {
  EXPECT_EQ(eval(scale(abs1(), 2), {-1}), Rational(2));
  const auto zero = scale(example1(), 0);
  for (const char* t : {"-3", "1/7", "5"}) EXPECT_EQ(eval(zero, {q(t)}), Rational(0));
  EXPECT_EQ(eval(scale(abs1(), -1), {2}), Rational(-2));
}

TEST(Prune, Examples) {
  const auto box = test::omega(1, 3);
  EXPECT_EQ(prune(expr1({{lin(1), lin(1, 1)}}), box).clauses(),
            (std::vector<MinMaxExpr::Clause>{{lin(1)}}));
  EXPECT_EQ(prune(expr1({{lin(1)}, {lin(1, -1)}}), box).clauses(),
            (std::vector<MinMaxExpr::Clause>{{lin(1)}}));
  const auto p = prune(example1(), test::omega(1, 1));
  test::Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(test::omega(1, 1));
    EXPECT_EQ(eval(p, x), eval(example1(), x));
  }
}

TEST(Prune, PreservesValuesOnBox) {
  test::Rng rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = rng.dim();
    const auto e = rng.expr(m);
    const SolidBox box(rng.point(test::omega(m, 2)), Rational(1 + trial % 3));
    const auto p = prune(e, box);
    EXPECT_LE(p.member_count(), e.member_count());
    for (int i = 0; i < 50; ++i) {
      const auto x = rng.point(box);
      EXPECT_EQ(eval(p, x), eval(e, x));
    }
  }
}

TEST(SemanticEqual, Examples) {
  const auto redundant = expr1({{lin(1), lin(1)}, {lin(-1), lin(-1)}});
  EXPECT_TRUE(semantic_equal(abs1(), redundant, test::omega(1, 2)));
  EXPECT_FALSE(semantic_equal(example1(), abs1(), test::omega(1, 2)));
  EXPECT_TRUE(semantic_equal(example1(), abs1(), test::omega(1, 1)));
}

TEST(SemanticEqual, AgreesWithSampling) {
  test::Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = rng.dim(2);
    const auto e = rng.expr(m, 4);
    const auto box = test::omega(m, 2);
    // Equal by construction: absorption law.
    EXPECT_TRUE(semantic_equal(e, meet(e, join(e, rng.expr(m, 2))), box));
    const auto f = rng.expr(m, 4);
    if (!semantic_equal(e, f, box)) continue;
    for (int i = 0; i < 50; ++i) {
      const auto x = rng.point(box);
      EXPECT_EQ(eval(e, x), eval(f, x));
    }
  }
  // A difference confined to a small region is still found.
  const auto bump_like = join(abs1(), meet(from_affine(lin(-10, 1)), from_affine(lin(10, 1))));
  EXPECT_FALSE(semantic_equal(abs1(), bump_like, test::omega(1, 1)));
}

TEST(LatticeLaws, PointwiseContracts) {
  test::Rng rng(38);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = rng.dim();
    const auto e1 = rng.expr(m);
    const auto e2 = rng.expr(m);
    const auto e3 = rng.expr(m);
    const Rational lambda = rng.coefficient();
    const auto j = join(e1, e2);
    const auto mt = meet(e1, e2);
    const auto s = add(e1, e2);
    const auto n = negate(e1);
    const auto sc = scale(e1, lambda);
    const auto absorb = meet(e1, join(e1, e2));
    const auto dist_l = meet(e1, join(e2, e3));
    const auto dist_r = join(meet(e1, e2), meet(e1, e3));
    for (int i = 0; i < 20; ++i) {
      const auto x = rng.point(test::omega(m, 10));
      const Rational a = eval(e1, x);
      const Rational b = eval(e2, x);
      EXPECT_EQ(eval(j, x), std::max(a, b));
      EXPECT_EQ(eval(mt, x), std::min(a, b));
      EXPECT_EQ(eval(s, x), a + b);
      EXPECT_EQ(eval(n, x), -a);
      EXPECT_EQ(eval(sc, x), lambda * a);
      EXPECT_EQ(eval(absorb, x), a);
      EXPECT_EQ(eval(dist_l, x), eval(dist_r, x));
    }
  }
}

TEST(LatticeLaws, ClausesAreConcave) {
  test::Rng rng(39);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = rng.dim();
    const auto e = rng.expr(m);
    for (const auto& clause : e.clauses()) {
      const MinMaxExpr c(m, {clause});
      const auto x = rng.point(test::omega(m, 5));
      const auto y = rng.point(test::omega(m, 5));
      Point mid(m);
      for (std::size_t i = 0; i < m; ++i) mid[i] = (x[i] + y[i]) / 2;
      EXPECT_GE(eval(c, mid), (eval(c, x) + eval(c, y)) / 2);
    }
  }
}

}  // namespace
}  // namespace pa
