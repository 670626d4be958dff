#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "walshlab/kernels.hpp"
#include "walshlab/martingale.hpp"

namespace walshlab {
namespace {

TEST(ConditionalExpectation, EndpointsAndOracle) {
  std::mt19937_64 rng(1);
  const auto f = oracle::random_integer_function(6, rng);
  EXPECT_EQ(conditional_expectation(f, 6), f);
  EXPECT_EQ(conditional_expectation(f, 0), ExactFunction::constant(6, f.integral()));
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(conditional_expectation(f, k), oracle::block_average(f, k));
    EXPECT_EQ(conditional_expectation(f, k), partial_sum(f, std::uint64_t{1} << k));
  }
  EXPECT_THROW(conditional_expectation(f, 7), std::out_of_range);
}

TEST(ConditionalExpectation, TowerProperty) {
  std::mt19937_64 rng(2);
  for (int r = 0; r < 5; ++r) {
    const auto f = oracle::random_integer_function(7, rng);
    for (int k = 0; k <= 7; ++k) {
      for (int l = 0; l <= 7; ++l) {
        ASSERT_EQ(conditional_expectation(conditional_expectation(f, l), k),
                  conditional_expectation(f, std::min(k, l)));
      }
    }
  }
}

TEST(Martingale, DifferencesTelescope) {
  std::mt19937_64 rng(3);
  const auto f = oracle::random_integer_function(5, rng);
  const auto mart = DyadicMartingale<Rational>::from_function(f);
  EXPECT_EQ(mart.depth(), 5);
  auto sum = ExactFunction::zero(5);
  for (int k = 0; k <= 5; ++k) sum += mart.difference(k);
  EXPECT_EQ(sum, f);
}

TEST(ConjugateTransform, Examples) {
  std::mt19937_64 rng(4);
  const auto f = oracle::random_integer_function(6, rng);
  EXPECT_EQ(conjugate_transform(f, ConjugateParameter{}), f);
  const auto ones = ConjugateParameter::from_bits(std::vector<std::uint8_t>(8, 1));
  EXPECT_EQ(conjugate_transform(conjugate_transform(f, ones), ones), f);
  for (int m = 1; m <= 7; ++m) {
    EXPECT_EQ(conjugate_truncation(f, m, ConjugateParameter{}), conditional_expectation(f, m - 1));
  }
}

TEST(ConjugateTruncation, TelescopedIdentity) {
  std::mt19937_64 rng(5);
  for (int r = 0; r < 40; ++r) {
    const int depth = 1 + static_cast<int>(rng() % 9);
    const auto f = oracle::random_integer_function(depth, rng);
    for (int p = 0; p < 4; ++p) {
      auto t = oracle::random_parameter(depth + 1, rng);
      if (p == 0) t = ConjugateParameter::from_bits({1, 0, 1}, {1, 0});
      for (int m = 0; m <= depth + 1; ++m) {
        ASSERT_EQ(conjugate_truncation(f, m, t), conjugate_truncation_telescoped(f, m, t)) << depth << ' ' << m;
      }
    }
  }
  const auto f = ExactFunction::zero(3);
  EXPECT_THROW(conjugate_truncation(f, 5, ConjugateParameter{}), std::out_of_range);
}

TEST(SquareFunction, ConjugationInvariant) {
  std::mt19937_64 rng(6);
  for (int r = 0; r < 10; ++r) {
    const auto f = oracle::random_integer_function(7, rng);
    const auto sf = square_function_squared(f);
    for (int p = 0; p < 5; ++p) {
      const auto t = oracle::random_parameter(9, rng);
      ASSERT_EQ(square_function_squared(conjugate_transform(f, t)), sf);
    }
  }
}

TEST(FejerDecomposition, SumsToConjugateFejerMean) {
  std::mt19937_64 rng(7);
  for (int r = 0; r < 30; ++r) {
    const int depth = 2 + static_cast<int>(rng() % 7);
    const auto f = oracle::random_integer_function(depth, rng);
    const std::uint64_t n = 1 + rng() % (std::uint64_t{1} << (depth - 1));
    const auto t = oracle::random_parameter(depth + 1, rng);
    const auto d = fejer_decomposition(f, n, t);
    ASSERT_EQ(d.sum(), conjugate_fejer_mean(f, n, t)) << depth << ' ' << n;

    auto j1 = ExactFunction::zero(depth);
    const int a = FrequencyIndex(n).msb();
    for (int m = 1; m <= a; ++m) {
      j1 += conjugate_truncation(f, m, t.with_t0_cleared()) *
            Rational(std::int64_t{1} << (m - 1), static_cast<std::int64_t>(n));
    }
    ASSERT_EQ(d.terms[0], j1);
  }
}

TEST(FejerDecomposition, PlainCaseReducesToFejerMean) {
  std::mt19937_64 rng(8);
  const auto f = oracle::random_integer_function(6, rng);
  for (int a = 0; a <= 5; ++a) {
    const std::uint64_t n = std::uint64_t{1} << a;
    EXPECT_EQ(fejer_decomposition(f, n, ConjugateParameter{}).sum(), fejer_mean(f, n));
  }
  EXPECT_THROW(fejer_decomposition(f, 64, ConjugateParameter{}), std::invalid_argument);
}

TEST(FejerDecomposition, LiteralConventionFlipsDcTerm) {
  std::mt19937_64 rng(9);
  const auto f = oracle::random_integer_function(5, rng);
  const auto t = ConjugateParameter::from_bits({1, 0, 1, 1});
  EXPECT_EQ(fejer_decomposition(f, 13, t, Beta0Convention::literal).sum(),
            conjugate_fejer_mean(f, 13, t, Beta0Convention::literal));
}

TEST(MaximalFunction, Examples) {
  const auto c = FloatFunction::constant(4, 2.5);
  EXPECT_EQ(maximal_function(c), c);
  for (std::uint64_t j = 1; j < 16; ++j) {
    FloatSpectrum s{4, std::vector<double>(16, 0.0)};
    s.coeffs[j] = 1.0;
    const auto fs = maximal_function(fwht_inverse(s));
    for (double v : fs.values()) EXPECT_DOUBLE_EQ(v, 1.0);
  }
  std::mt19937_64 rng(10);
  const auto f = oracle::random_float_function(6, rng);
  const auto fs = maximal_function(f);
  for (std::size_t x = 0; x < f.size(); ++x) EXPECT_GE(fs[x], std::abs(f[x]));
  EXPECT_GE(hp_quasinorm(f, 1.0), lp_norm(f, 1.0));
  EXPECT_NEAR(hp_quasinorm(FloatFunction::constant(3, -4.0), 0.5), 4.0, 1e-12);
  EXPECT_THROW(hp_quasinorm(f, 0.0), std::invalid_argument);
}

TEST(Contraction, ExpectationsAndFejerMeans) {
  std::mt19937_64 rng(11);
  for (int r = 0; r < 20; ++r) {
    const auto f = oracle::random_float_function(8, rng);
    const double norm = f.l1_norm();
    for (int m = 0; m <= 8; ++m) ASSERT_LE(conditional_expectation(f, m).l1_norm(), norm * (1 + 1e-12));
    for (std::uint64_t n : {3U, 17U, 100U, 255U}) {
      const double kn = to_double(fejer_l1_norm(n));
      ASSERT_LE(fejer_mean(f, n).l1_norm(), kn * norm * (1 + 1e-12));
      ASSERT_LE(kn, 17.0 / 15.0);
    }
  }
}

TEST(Llogl, Examples) {
  EXPECT_EQ(llogl_functional(FloatFunction::constant(3, 0.7)), 0.0);
  auto f = FloatFunction::zero(4);
  f[0] = 16.0;
  EXPECT_NEAR(llogl_functional(f), std::log(16.0), 1e-12);
  std::mt19937_64 rng(12);
  auto g = oracle::random_float_function(6, rng) * 5.0;
  EXPECT_GE(llogl_functional(g * 2.0), 2 * llogl_functional(g));
}

TEST(Young, ConvexityOnGrid) {
  EXPECT_TRUE(convex_on_grid(YoungFunction::q1(), 1e4, 2000));
  EXPECT_TRUE(convex_on_grid(YoungFunction::q2(), 1e4, 2000));
  EXPECT_TRUE(convex_on_grid(YoungFunction::q2(), 1.0, 2000));
  const YoungFunction concave{"sqrt", [](double u) { return std::sqrt(u); }};
  EXPECT_FALSE(convex_on_grid(concave, 10.0, 100));
}

TEST(Luxemburg, LinearGaugeAndModularBracket) {
  std::mt19937_64 rng(13);
  const auto f = oracle::random_float_function(6, rng);
  EXPECT_NEAR(luxemburg_norm(f, YoungFunction::linear()), f.l1_norm(), 1e-8 * f.l1_norm());
  EXPECT_EQ(luxemburg_norm(FloatFunction::zero(3), YoungFunction::q1()), 0.0);
  for (const auto& q : {YoungFunction::q1(), YoungFunction::q2()}) {
    const double k = luxemburg_norm(f, q);
    EXPECT_LE(orlicz_modular(f, q, k), 1.0);
    EXPECT_GT(orlicz_modular(f, q, k * (1 - 1e-6)), 1.0);
    EXPECT_LE(luxemburg_norm(f * 2.0, q), 2 * k * (1 + 1e-6));
  }
}

TEST(Luxemburg, TwoValuedIndicator) {
  for (int a = 1; a <= 4; ++a) {
    auto f = FloatFunction::zero(2 * a);
    f[0] = std::ldexp(1.0, 2 * a);
    for (const auto& q : {YoungFunction::q1(), YoungFunction::q2()}) {
      const double u = std::ldexp(1.0, 2 * a);
      EXPECT_LE(luxemburg_norm(f, q), 1 + q(u) / u);
    }
  }
}

}  // namespace
}  // namespace walshlab
