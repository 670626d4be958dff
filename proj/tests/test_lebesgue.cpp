#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "walshlab/kernels.hpp"
#include "walshlab/lebesgue.hpp"

namespace walshlab {
namespace {

TEST(LebesgueExact, Examples) {
  const auto b = lebesgue_exact(FrequencyIndex(5), ConjugateParameter{});
  EXPECT_EQ(b.total, Rational(7, 4));
  EXPECT_EQ(b.j1, Rational(3, 4));
  EXPECT_EQ(b.j2, Rational(3, 8));
  EXPECT_EQ(b.j3, Rational(5, 8));
  EXPECT_EQ(lebesgue_exact(FrequencyIndex(3), ConjugateParameter{}).total, Rational(3, 2));
  EXPECT_EQ(lebesgue_exact(FrequencyIndex(2), ConjugateParameter::from_rational(1, 4)).total, Rational(1));
  std::mt19937_64 rng(1);
  for (int r = 0; r < 8; ++r) {
    const auto one = lebesgue_exact(FrequencyIndex(1), oracle::random_parameter(3, rng));
    EXPECT_EQ(one.total, Rational(1));
    EXPECT_EQ(one.j2, Rational(1, 2));
    EXPECT_EQ(one.j3, Rational(1, 2));
  }
  for (int k = 0; k < 30; ++k) {
    EXPECT_EQ(lebesgue_exact(FrequencyIndex(std::uint64_t{1} << k), ConjugateParameter{}).total, Rational(1));
  }
}

TEST(LebesgueExact, MatchesBruteforceAndOracle) {
  std::mt19937_64 rng(2);
  for (std::uint64_t n = 1; n < 512; ++n) {
    const FrequencyIndex idx(n);
    for (int r = 0; r < 4; ++r) {
      const auto t = oracle::random_parameter(idx.msb() + 2, rng);
      const Rational closed = lebesgue_exact(idx, t).total;
      ASSERT_EQ(closed, lebesgue_bruteforce(idx, t)) << n;
      if (n < 128) ASSERT_EQ(closed, oracle::lebesgue(n, t)) << n;
    }
  }
}

TEST(LebesgueExact, DenominatorDividesPowerOfTwo) {
  std::mt19937_64 rng(3);
  for (int r = 0; r < 2000; ++r) {
    const std::uint64_t n = 1 + (rng() % ((std::uint64_t{1} << 40) - 1));
    const FrequencyIndex idx(n);
    const auto b = lebesgue_exact(idx, oracle::random_parameter(idx.msb() + 2, rng));
    const Rational scaled = b.total * Rational(pow2(static_cast<unsigned>(idx.msb() + 1)));
    ASSERT_EQ(boost::multiprecision::denominator(scaled), 1) << n;
    ASSERT_LE(b.j2 + b.j3, Rational(2));
  }
}

TEST(LebesgueExact, HugeIndicesUseBigArithmetic) {
  const FrequencyIndex n((std::uint64_t{1} << 63) | 0x5555555555555555ULL);
  const auto b = lebesgue_exact(n, ConjugateParameter::from_rational(1, 3));
  EXPECT_EQ(b.total, b.j1 + b.j2 + b.j3);
  EXPECT_GT(b.total, Rational(0));
  EXPECT_EQ(lebesgue_exact(n, ConjugateParameter{}).total, lebesgue_classical(n));
}

TEST(LebesgueClassical, MatchesDefinitionAndT0) {
  for (std::uint64_t n = 1; n < (1U << 12); ++n) {
    const FrequencyIndex idx(n);
    ASSERT_EQ(lebesgue_classical(idx), oracle::classical_lebesgue(n)) << n;
    ASSERT_EQ(lebesgue_exact(idx, ConjugateParameter{}).total, lebesgue_classical(idx)) << n;
  }
}

TEST(Bruteforce, ResourceCap) {
  EXPECT_THROW(lebesgue_bruteforce(FrequencyIndex(std::uint64_t{1} << 21), ConjugateParameter{}), ResourceCapError);
}

TEST(CheckBounds, Examples) {
  const auto r3 = check_bounds(FrequencyIndex(3), ConjugateParameter{});
  EXPECT_TRUE(r3.mtk_ok);
  EXPECT_EQ(r3.classical, Rational(3, 2));
  const auto r5 = check_bounds(FrequencyIndex(5), ConjugateParameter{});
  EXPECT_TRUE(r5.mtk_ok);
  EXPECT_TRUE(r5.sws_ok);
  EXPECT_EQ(r5.v_n, 4);
  const auto r2 = check_bounds(FrequencyIndex(2), ConjugateParameter::from_rational(1, 4));
  EXPECT_EQ(r2.m, 1U);
  EXPECT_EQ(r2.v_m, 2);
  EXPECT_EQ(r2.lebesgue, Rational(1));
  EXPECT_TRUE(r2.upper_ok);
  EXPECT_GE(r2.upper_bound, Rational(6));
  EXPECT_EQ(r2.t_digest.size(), 3U);
}

TEST(CheckBounds, BlockEstimateAndUpperOnExhaustiveRange) {
  for (std::uint64_t n = 1; n < 256; ++n) {
    const FrequencyIndex idx(n);
    const int bits = idx.msb() + 1;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
      const auto t = ConjugateParameter::from_prefix_pattern(pattern, bits);
      const auto r = check_bounds(idx, t);
      ASSERT_TRUE(r.upper_ok) << n << ' ' << r.t_digest;
      ASSERT_TRUE(r.block_estimate_ok) << n << ' ' << r.t_digest;
      ASSERT_GE(r.lower_margin(2), 0) << n << ' ' << r.t_digest;
      ASSERT_EQ(r.upper_margin, r.upper_bound - r.lebesgue);
    }
  }
}

TEST(Scan, DeterministicAcrossThreadCounts) {
  ScanConfig a;
  a.exp_min = 0;
  a.exp_max = 5;
  a.threads = 1;
  ScanConfig b = a;
  b.threads = 4;
  const auto ra = scan(a);
  const auto rb = scan(b);
  ASSERT_EQ(ra.records.size(), rb.records.size());
  for (std::size_t i = 0; i < ra.records.size(); ++i) {
    ASSERT_EQ(ra.records[i].n, rb.records[i].n);
    ASSERT_EQ(ra.records[i].t_digest, rb.records[i].t_digest);
  }
  EXPECT_EQ(ra.summary.min_lower_slack, rb.summary.min_lower_slack);

  ScanConfig r;
  r.exp_min = 3;
  r.exp_max = 12;
  r.sampling = TSampling::random;
  r.samples = 500;
  r.seed = 77;
  const auto r1 = scan(r);
  r.threads = 3;
  const auto r2 = scan(r);
  ASSERT_EQ(r1.records.size(), 500U);
  for (std::size_t i = 0; i < r1.records.size(); ++i) ASSERT_EQ(r1.records[i].lebesgue, r2.records[i].lebesgue);
}

TEST(Scan, Caps) {
  ScanConfig c;
  c.exp_max = 11;
  EXPECT_THROW(scan(c), ResourceCapError);
  c.exp_max = 21;
  c.sampling = TSampling::random;
  c.samples = 1;
  EXPECT_THROW(scan(c), ResourceCapError);
}

TEST(Scan, SamplePairsAreSeeded) {
  const auto a = sample_pairs(2, 10, 50, 5);
  const auto b = sample_pairs(2, 10, 50, 5);
  EXPECT_EQ(a, b);
  for (const auto& [n, t] : a) {
    const int level = FrequencyIndex(n).msb();
    EXPECT_GE(level, 2);
    EXPECT_LE(level, 10);
    EXPECT_EQ(t.bit(0), 0);
  }
}

TEST(FejerNormScan, SmallRangeAgreesWithMaterializedKernels) {
  const auto res = fejer_norm_scan(300);
  EXPECT_EQ(res.violations, 0U);
  Rational best(0);
  std::uint64_t arg = 0;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto norm = fejer_kernel<Rational>(n, required_depth(n)).l1_norm();
    if (norm > best) {
      best = norm;
      arg = n;
    }
  }
  EXPECT_EQ(res.max_norm, best);
  EXPECT_EQ(res.argmax, arg);
}

}  // namespace
}  // namespace walshlab
