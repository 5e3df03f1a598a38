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

#include "pa/approx.hpp"
#include "pa/cells.hpp"
#include "support.hpp"

namespace pa {
namespace {

using test::abs1;
using test::lin;
using test::q;
using test::throws_kind;

ContinuousOracle oracle(const char* spec, std::size_t dim = 1) { return make_oracle(spec, dim); }

ContinuousOracle sum_oracle() {
  ContinuousOracle o;
  o.name = "x1+x2";
  o.dim = 2;
  o.evaluate = [](const Point& x) { return x[0] + x[1]; };
  o.lipschitz = [](const SolidBox&) { return Rational(2); };
  return o;
}

// Linear interpolation between neighbouring grid vertices on the line.
Rational interpolate_1d(const ContinuousOracle& f, const SolidBox& box, const Rational& step,
                        const Rational& t) {
  const Rational lo = box.lower(0);
  std::int64_t k = ((t - lo) / step).floor();
  if (Rational(static_cast<long>(k)) * step + lo >= box.upper(0)) --k;
  const Rational a = lo + step * Rational(static_cast<long>(k));
  const Rational b = a + step;
  const Rational w = (t - a) / step;
  return (Rational(1) - w) * f.evaluate({a}) + w * f.evaluate({b});
}

TEST(Oracles, Registry) {
  EXPECT_EQ(oracle("abs", 2).evaluate({-1, 2}), Rational(3));
  EXPECT_EQ(oracle("min-abs-1").evaluate({q("-1/2")}), q("1/2"));
  EXPECT_EQ(oracle("min-abs-1").evaluate({5}), Rational(1));
  EXPECT_EQ(oracle("quadratic").evaluate({q("3/2")}), q("9/4"));
  EXPECT_EQ(oracle("quadratic").lipschitz(SolidBox({1}, 2)), Rational(6));
  EXPECT_EQ(oracle("pyramid", 2).evaluate({q("1/2"), q("-1/4")}), q("1/2"));
  const auto p = oracle("poly:1,-2,1/2");
  EXPECT_EQ(p.evaluate({2}), Rational(-1));
  // |p'| = |t - 2| <= 5 on [-3, 3]
  EXPECT_EQ(p.lipschitz(test::omega(1, 3)), Rational(5));
  EXPECT_FALSE(p.nonnegative);
  EXPECT_EQ(oracle("const:-3/2").evaluate({7}), q("-3/2"));
  EXPECT_FALSE(oracle("const:-3/2").nonnegative);
  EXPECT_TRUE(throws_kind([] { oracle("sine"); }, ErrorKind::kMalformedInput));
  EXPECT_TRUE(throws_kind([] { oracle("poly:1,x"); }, ErrorKind::kMalformedInput));
  EXPECT_TRUE(throws_kind([] { oracle("poly:1,2", 2); }, ErrorKind::kDimensionMismatch));
}

TEST(OracleParts, PositiveAndNegative) {
  const auto f = oracle("poly:0,1");
  const auto plus = positive_part(f);
  const auto minus = negative_part(f);
  EXPECT_TRUE(plus.nonnegative);
  EXPECT_EQ(plus.evaluate({-2}), Rational(0));
  EXPECT_EQ(plus.evaluate({3}), Rational(3));
  EXPECT_EQ(minus.evaluate({-2}), Rational(2));
  EXPECT_EQ(minus.lipschitz(test::omega(1, 1)), f.lipschitz(test::omega(1, 1)));
}

TEST(KuhnInterpolant, Examples) {
  const auto box = test::omega(1, 1);
  const auto a = kuhn_interpolant(oracle("abs"), box, 1);
  EXPECT_EQ(a.vertices, 3u);
  EXPECT_TRUE(semantic_equal(a.expr, abs1(), box));
  const auto c = kuhn_interpolant(oracle("const:7/3", 2), SolidBox({1, -1}, 2), q("1/2"));
  EXPECT_TRUE(semantic_equal(c.expr, MinMaxExpr::constant(2, q("7/3")), SolidBox({1, -1}, 2)));
  const auto s = kuhn_interpolant(sum_oracle(), test::omega(2, 1), 1);
  EXPECT_TRUE(semantic_equal(s.expr, from_affine(test::aff({1, 1}, 0)), test::omega(2, 1)));
}

TEST(KuhnInterpolant, Errors) {
  EXPECT_TRUE(throws_kind([] { kuhn_interpolant(oracle("abs"), test::omega(1, 1), q("3/10")); },
                          ErrorKind::kBadStep));
  EXPECT_TRUE(throws_kind([] { kuhn_interpolant(oracle("abs"), test::omega(1, 1), 0); },
                          ErrorKind::kBadStep));
  Limits tiny;
  tiny.grid_budget = 100;
  EXPECT_TRUE(throws_kind([&] { kuhn_interpolant(oracle("abs", 2), test::omega(2, 1), q("1/8"), tiny); },
                          ErrorKind::kGridTooLarge));
  ContinuousOracle liar = oracle("poly:-1");
  liar.nonnegative = true;
  EXPECT_TRUE(throws_kind([&] { kuhn_interpolant(liar, test::omega(1, 1), 1); },
                          ErrorKind::kNotNonnegative));
  EXPECT_TRUE(throws_kind([] { kuhn_interpolant(oracle("abs"), test::omega(2, 1), 1); },
                          ErrorKind::kDimensionMismatch));
}

TEST(KuhnInterpolant, LineMatchesDirectInterpolation) {
  test::Rng rng(61);
  const std::vector<std::string> specs{"quadratic", "poly:1,-3,0,1/2", "min-abs-1", "poly:2,0,-1"};
  for (const auto& spec : specs) {
    const auto f = oracle(spec.c_str());
    const SolidBox box({q("1/2")}, 2);
    const Rational step = q("1/4");
    const auto interp = kuhn_interpolant(f, box, step);
    for (long k = 0; k <= 16; ++k) {
      const Point v{box.lower(0) + step * Rational(k)};
      EXPECT_EQ(eval(interp.expr, v), f.evaluate(v));
    }
    const Rational bound = f.lipschitz(box) * step;
    for (int i = 0; i < 200; ++i) {
      const auto x = rng.point(box);
      const Rational value = eval(interp.expr, x);
      EXPECT_EQ(value, interpolate_1d(f, box, step, x[0])) << spec << " at " << x[0];
      EXPECT_LE((value - f.evaluate(x)).abs(), bound);
    }
  }
}

TEST(KuhnInterpolant, PlaneVerticesAndErrorBound) {
  test::Rng rng(62);
  Limits wide;
  wide.hyperplane_limit = 512;
  for (const char* spec : {"quadratic", "pyramid", "abs"}) {
    const auto f = oracle(spec, 2);
    const auto box = test::omega(2, 1);
    const Rational step = q("1/2");
    const auto interp = kuhn_interpolant(f, box, step, wide);
    EXPECT_EQ(interp.vertices, 25u);
    for (long i = 0; i <= 4; ++i) {
      for (long j = 0; j <= 4; ++j) {
        const Point v{Rational(-1) + step * Rational(i), Rational(-1) + step * Rational(j)};
        EXPECT_EQ(eval(interp.expr, v), f.evaluate(v)) << spec;
      }
    }
    const Rational bound = f.lipschitz(box) * step;
    for (int i = 0; i < 200; ++i) {
      const auto x = rng.point(box);
      EXPECT_LE((eval(interp.expr, x) - f.evaluate(x)).abs(), bound) << spec;
    }
  }
}

TEST(KuhnInterpolant, PlaneMatchesBarycentricFormula) {
  // f(x) = x1 * x2 has a saddle, so every Kuhn simplex carries its own piece.
  ContinuousOracle f;
  f.name = "x1*x2";
  f.dim = 2;
  f.evaluate = [](const Point& x) { return x[0] * x[1]; };
  f.lipschitz = [](const SolidBox& b) { return (b.upper(0).abs() + b.upper(1).abs()) * 2; };
  const auto box = test::omega(2, 1);
  Limits wide;
  wide.hyperplane_limit = 512;
  const auto interp = kuhn_interpolant(f, box, 1, wide);
  test::Rng rng(63);
  for (int i = 0; i < 200; ++i) {
    const auto x = rng.point(box);
    // Cube [a, a+1]^2 split along the diagonal through a and a + (1, 1).
    const Rational a0(x[0].floor() == 1 ? 0L : static_cast<long>(x[0].floor()));
    const Rational a1(x[1].floor() == 1 ? 0L : static_cast<long>(x[1].floor()));
    const Rational u = x[0] - a0;
    const Rational v = x[1] - a1;
    const auto val = [&](const Rational& s, const Rational& t) { return f.evaluate({a0 + s, a1 + t}); };
    const Rational expected = u >= v ? (Rational(1) - u) * val(0, 0) + (u - v) * val(1, 0) + v * val(1, 1)
                                     : (Rational(1) - v) * val(0, 0) + (v - u) * val(0, 1) + u * val(1, 1);
    EXPECT_EQ(eval(interp.expr, x), expected);
  }
}

TEST(UniformApprox, ExampleOneIsReproduced) {
  const auto r = uniform_approx(oracle("min-abs-1"), q("1/2"), 2);
  ASSERT_TRUE(r.report.certified_bound);
  EXPECT_LE(*r.report.certified_bound, q("1/2"));
  EXPECT_EQ(r.report.max_observed_error, Rational(0));
  EXPECT_EQ(r.report.samples.size(), 500u);
  EXPECT_EQ(r.report.boxes_processed, 5u);
  for (const auto& [anchor, step] : r.report.grid_steps) {
    const SolidBox wide(to_point(anchor), 2);
    for (Rational t = wide.lower(0); t <= wide.upper(0); t += step) {
      if (SolidBox::omega(1, 3).contains(Point{t})) {
        EXPECT_EQ(eval_lpa(r.h, {t}), oracle("min-abs-1").evaluate({t}));
      }
    }
  }
}

TEST(UniformApprox, ZeroFunction) {
  const auto r = uniform_approx(oracle("const:0"), q("1/10"), 2);
  EXPECT_EQ(r.report.max_observed_error, Rational(0));
  for (const auto& s : r.report.samples) EXPECT_EQ(s.h, Rational(0));
  EXPECT_TRUE(r.h.family.listed_members().empty());
}

TEST(UniformApprox, Quadratic) {
  const auto f = oracle("quadratic");
  const auto r = uniform_approx(f, q("1/4"), 1);
  ASSERT_TRUE(r.report.certified_bound);
  EXPECT_LE(*r.report.certified_bound, q("1/4"));
  for (const auto& [anchor, step] : r.report.grid_steps) EXPECT_LE(step, q("1/16"));
  EXPECT_LE(r.report.max_observed_error, q("1/4"));
  for (const auto& s : r.report.samples) {
    EXPECT_TRUE(test::omega(1, 2).contains(s.x));
    EXPECT_EQ(s.f, f.evaluate(s.x));
    EXPECT_EQ(s.h, eval_lpa(r.h, s.x));
  }
}

TEST(UniformApprox, SignedFunctionUsesBothParts) {
  const auto f = oracle("poly:0,1");
  const auto r = uniform_approx(f, q("1/2"), 1);
  ASSERT_TRUE(r.h.subtracted);
  ASSERT_TRUE(r.report.certified_bound);
  EXPECT_LE(*r.report.certified_bound, q("1/2"));
  EXPECT_LE(r.report.max_observed_error, q("1/2"));
  // The restriction to Omega_n is a PA function equal to h there.
  Limits wide;
  wide.hyperplane_limit = 4096;
  const auto restricted = restrict_to_box(r.h, 1, wide);
  for (const auto& s : r.report.samples) {
    if (test::omega(1, 1).contains(s.x)) {
      EXPECT_EQ(eval(restricted, s.x), s.h);
    }
  }
}

TEST(UniformApprox, PlaneAndBestEffort) {
  ApproxOptions options;
  options.samples = 100;
  options.limits.hyperplane_limit = 512;
  const auto r = uniform_approx(oracle("pyramid", 2), q("1/2"), 1, options);
  ASSERT_TRUE(r.report.certified_bound);
  EXPECT_LE(r.report.max_observed_error, *r.report.certified_bound);

  ContinuousOracle blind = oracle("quadratic");
  blind.lipschitz = nullptr;
  const auto b = uniform_approx(blind, q("1/4"), 1);
  EXPECT_FALSE(b.report.certified_bound);
  EXPECT_EQ(b.report.grid_steps.begin()->second, q("1/8"));
  EXPECT_TRUE(throws_kind([] { uniform_approx(oracle("abs"), 0, 1); }, ErrorKind::kInvalidArgument));
}

TEST(MonotoneUnderApprox, ConstantOne) {
  const auto seq = monotone_under_approx(oracle("const:1"), 2);
  ASSERT_EQ(seq.terms.size(), 2u);
  test::Rng rng(64);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(test::omega(1, 1));
    EXPECT_EQ(eval(seq.terms[0], x), Rational(1));
  }
  EXPECT_EQ(eval(seq.terms[0], {q("5/2")}), Rational(0));
  EXPECT_EQ(eval(seq.terms[0], {-3}), Rational(0));
  EXPECT_GE(bound_of_difference(seq.terms[1], seq.terms[0], test::omega(1, 3)).first, Rational(0));
}

TEST(MonotoneUnderApprox, AbsoluteValue) {
  const auto f = oracle("abs");
  const auto seq = monotone_under_approx(f, 4);
  Limits wide;
  wide.hyperplane_limit = 1024;
  for (const auto& h : seq.terms) EXPECT_EQ(eval(h, {0}), Rational(0));
  EXPECT_LE(f.evaluate({1}) - eval(seq.terms[2], {1}), q("2/8"));
  test::Rng rng(65);
  for (std::size_t k = 0; k < seq.terms.size(); ++k) {
    const auto box = SolidBox::omega(1, Rational(static_cast<long>(k + 1)));
    if (k + 1 < seq.terms.size()) {
      EXPECT_GE(bound_of_difference(seq.terms[k + 1], seq.terms[k], test::omega(1, 6), wide).first,
                Rational(0));
    }
    for (int i = 0; i < 100; ++i) {
      const auto x = rng.point(test::omega(1, 6));
      const Rational v = eval(seq.terms[k], x);
      EXPECT_GE(v, Rational(0));
      EXPECT_LE(v, f.evaluate(x));
      if (box.contains(x)) {
        EXPECT_LE(f.evaluate(x) - v, seq.bounds[k]);
      }
    }
  }
}

TEST(MonotoneUnderApprox, Errors) {
  EXPECT_TRUE(throws_kind([] { monotone_under_approx(oracle("poly:0,1"), 2); },
                          ErrorKind::kNotNonnegative));
  ContinuousOracle blind = oracle("abs");
  blind.lipschitz = nullptr;
  EXPECT_TRUE(throws_kind([&] { monotone_under_approx(blind, 2); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(throws_kind([] { monotone_under_approx(oracle("abs"), 0); }, ErrorKind::kInvalidArgument));
  Limits tiny;
  tiny.grid_budget = 10;
  EXPECT_TRUE(throws_kind([&] { monotone_under_approx(oracle("abs"), 2, tiny); },
                          ErrorKind::kGridTooLarge));
}

TEST(OrderApprox, ConstantMinusOne) {
  const auto seq = order_approx(oracle("const:-1"), 3);
  test::Rng rng(66);
  for (std::size_t k = 0; k < 3; ++k) {
    for (int i = 0; i < 50; ++i) {
      const auto x = rng.point(SolidBox::omega(1, Rational(static_cast<long>(k + 1))));
      EXPECT_EQ(eval(seq.terms[k], x), Rational(-1));
    }
  }
}

TEST(OrderApprox, Identity) {
  const auto f = oracle("poly:0,1");
  const auto seq = order_approx(f, 3);
  for (const auto& t : seq.terms) EXPECT_EQ(eval(t, {0}), Rational(0));
  EXPECT_LE((f.evaluate({q("1/2")}) - eval(seq.terms[2], {q("1/2")})).abs(), q("4/8"));
  test::Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.point(test::omega(1, 2));
    Rational previous(-1);
    for (std::size_t k = 0; k < seq.terms.size(); ++k) {
      const Rational err = (f.evaluate(x) - eval(seq.terms[k], x)).abs();
      if (k > 0) {
        EXPECT_LE(err, previous);
      }
      previous = err;
    }
  }
}

}  // namespace
}  // namespace pa
