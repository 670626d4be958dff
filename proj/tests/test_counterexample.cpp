#include <gtest/gtest.h>

#include <cmath>
#include <optional>

#include "oracles.hpp"
#include "walshlab/counterexample.hpp"
#include "walshlab/kernels.hpp"

namespace walshlab {
namespace {

TEST(BlockParameter, AlternatingIsOneThird) {
  const auto alt = BlockParameter::alternating();
  EXPECT_EQ(alt.parameter(), ConjugateParameter::from_rational(1, 3));
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(alt.q(i), 2 * i - 1);
    EXPECT_EQ(alt.p(i), 2 * i - 1);
  }
  EXPECT_THROW(alt.q(0), std::out_of_range);
}

TEST(BlockParameter, PeriodicValidation) {
  const auto b = BlockParameter::periodic(2, 3, 5);
  const auto t = b.parameter();
  for (int j = 0; j < 30; ++j) {
    bool inside = false;
    for (int i = 1; i <= 7; ++i) inside = inside || (b.q(i) <= j && j <= b.p(i));
    ASSERT_EQ(t.bit(static_cast<std::size_t>(j)), inside ? 1 : 0) << j;
  }
  EXPECT_THROW(BlockParameter::periodic(1, 2, 2), std::invalid_argument);
  EXPECT_THROW(BlockParameter::periodic(0, 0, 3), std::invalid_argument);
  EXPECT_THROW(BlockParameter::periodic(3, 2, 5), std::invalid_argument);
}

TEST(ConstraintSets, Measures) {
  for (const auto& pattern : {BlockParameter::alternating(), BlockParameter::periodic(0, 2, 4)}) {
    for (int a = 1; a <= 6; ++a) {
      EXPECT_EQ(delta_set(pattern, a).measure(), dyadic_rational(1, static_cast<unsigned>(2 * a)));
      Rational total(0);
      for (int i = 1; i <= a; ++i) {
        const auto s = delta_tilde_set(pattern, i);
        EXPECT_EQ(s.measure(), dyadic_rational(1, static_cast<unsigned>(2 * i)));
        total += Rational(pow2(static_cast<unsigned>(2 * i))) * s.measure();
      }
      EXPECT_EQ(total, Rational(a));
    }
  }
}

TEST(ConstraintSets, CountedMeasureMatches) {
  const auto alt = BlockParameter::alternating();
  const auto s = delta_set(alt, 3);
  std::int64_t hits = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << s.depth); ++c) hits += s.contains(c) ? 1 : 0;
  EXPECT_EQ(Rational(hits, std::int64_t{1} << s.depth), s.measure());
  // Delta_A of the alternating pattern is {x_0 = ... = x_{2A-1} = 0}.
  for (std::uint64_t c = 0; c < 64; ++c) EXPECT_EQ(s.contains(c), (c & 63U) == 0);
}

TEST(Counterexample, BasicShape) {
  for (int a = 1; a <= 3; ++a) {
    const auto ce = build_counterexample<Rational>(a);
    EXPECT_EQ(ce.f.integral(), Rational(1));
    EXPECT_EQ(ce.n, std::uint64_t{1} << (4 * a - 1));
    EXPECT_EQ(ce.working_depth, 4 * a - 1);
    EXPECT_NEAR(llogl_functional(to_float(ce.f)), 2 * a * std::log(2.0), 1e-12);
  }
  const auto one = build_counterexample<Rational>(1);
  Rational count(0);
  for (const auto& v : one.f.values()) count += v == Rational(4) ? 1 : 0;
  EXPECT_EQ(count / Rational(static_cast<std::int64_t>(one.f.size())), Rational(1, 4));
}

TEST(Counterexample, ExpectationsVanishAboveBlock) {
  const auto alt = BlockParameter::alternating();
  for (int a = 1; a <= 3; ++a) {
    const auto ce = build_counterexample<Rational>(a);
    for (int i = 1; i <= a; ++i) {
      const auto tilde = delta_tilde_set(alt, i);
      for (int level = alt.p(i) + 1; level <= ce.f.depth(); ++level) {
        const auto e = conditional_expectation(ce.f, level);
        for (std::size_t c = 0; c < e.size(); ++c) {
          if (tilde.contains(c)) ASSERT_EQ(e[c], Rational(0)) << a << ' ' << i << ' ' << level;
        }
      }
    }
  }
}

// Value of E~_m f_A on Delta~_i, provided it is constant there.
Rational value_on(const ExactFunction& g, const ConstraintSet& s) {
  std::optional<Rational> value;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (!s.contains(c)) continue;
    if (!value) value = g[c];
    if (*value != g[c]) throw std::logic_error("not constant on the set");
  }
  return *value;
}

TEST(Counterexample, TruncationOnTildeSets) {
  const auto alt = BlockParameter::alternating();
  for (int a = 1; a <= 3; ++a) {
    const auto ce = build_counterexample<Rational>(a);
    const int pa = alt.p(a);
    const auto f = ce.f.lifted(ce.working_depth);
    for (int m = pa + 2; m <= 2 * pa + 1; ++m) {
      const auto g = conjugate_truncation(f, m, ce.t);
      for (int i = 1; i <= a; ++i) {
        const Rational four_i(pow2(static_cast<unsigned>(2 * i)));
        ASSERT_EQ(value_on(g, delta_tilde_set(alt, i)), Rational(-2) * (four_i - 1) / 3) << a << ' ' << i << ' ' << m;
      }
    }
  }
}

TEST(Counterexample, DecompositionForPowerOfTwo) {
  for (int a = 1; a <= 2; ++a) {
    const auto ce = build_counterexample<Rational>(a);
    const auto f = ce.f.lifted(ce.working_depth + 1);
    const auto d = fejer_decomposition(f, ce.n, ce.t);
    const auto zero = ExactFunction::zero(f.depth());
    EXPECT_EQ(d.terms[3], zero);
    EXPECT_EQ(d.terms[4], zero);
    EXPECT_EQ(d.terms[5], zero);
    EXPECT_EQ(d.terms[0] + d.terms[1] + d.terms[2], conjugate_fejer_mean(f, ce.n, ce.t));
    const Rational cap = Rational(17, 15) * 3 * f.l1_norm();
    EXPECT_LE(d.terms[1].l1_norm(), cap);
    EXPECT_LE(d.terms[2].l1_norm(), cap);
  }
}

TEST(Counterexample, FloatMatchesExactShadow) {
  for (int a = 1; a <= 2; ++a) {
    const auto ex = build_counterexample<Rational>(a);
    const auto fl = build_counterexample<double>(a);
    const Rational y = conjugate_fejer_mean_l1(ex.f.lifted(ex.working_depth), ex.n, ex.t);
    const double yf = conjugate_fejer_mean_l1(fl.f.lifted(fl.working_depth), fl.n, fl.t);
    EXPECT_NEAR(yf, to_double(y), 1e-12 * to_double(y));
  }
}

TEST(GrowthRun, IncreasingRows) {
  const auto rows = growth_run(4, BlockParameter::alternating(), 1, true);
  ASSERT_EQ(rows.size(), 4U);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].a, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].kernel_l1, conjugate_fejer_l1_norm(rows[i].n, ConjugateParameter::from_rational(1, 3)));
    if (i > 0) {
      EXPECT_GT(rows[i].y, rows[i - 1].y);
      EXPECT_GT(rows[i].kernel_l1, rows[i - 1].kernel_l1);
    }
    EXPECT_EQ(rows[i].y_exact.has_value(), rows[i].a <= kShadowMaxA);
    EXPECT_LT(rows[i].shadow_rel_error, 1e-12);
  }
  const auto threaded = growth_run(4, BlockParameter::alternating(), 3, false);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(threaded[i].y, rows[i].y);
}

TEST(Orlicz, LowerBoundGate) {
  EXPECT_THROW(orlicz_lower_bound(1.0, 0, YoungFunction::q1()), std::domain_error);
  EXPECT_THROW(orlicz_lower_bound(1.0, 0, YoungFunction::q2()), std::domain_error);
  const double u = 16.0;
  EXPECT_DOUBLE_EQ(orlicz_lower_bound(3.0, 2, YoungFunction::q1()), 3.0 / (1 + std::log1p(u)));
}

TEST(RationalSweep, SmallOctavesAreExhaustive) {
  const auto rows = rational_sweep(ConjugateParameter{}, 1, 6, 64, 1, 1);
  ASSERT_EQ(rows.size(), 6U);
  for (const auto& row : rows) {
    EXPECT_EQ(row.samples, std::uint64_t{1} << row.level);
    EXPECT_EQ(row.above_fejer_bound, 0U);
    EXPECT_EQ(row.max_norm, fejer_l1_norm(row.argmax));
  }
  const auto a = rational_sweep(ConjugateParameter::from_rational(3, 8), 9, 11, 16, 4, 1);
  const auto b = rational_sweep(ConjugateParameter::from_rational(3, 8), 9, 11, 16, 4, 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].samples, 16U);
    EXPECT_EQ(a[i].max_norm, b[i].max_norm);
    EXPECT_EQ(a[i].argmax, b[i].argmax);
  }
}

}  // namespace
}  // namespace walshlab
