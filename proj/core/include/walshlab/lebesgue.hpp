#pragma once

// Lebesgue constants L_n^(t) = ||D~_n^(t)||_1 and the bound checks built on
// them. All arithmetic here is exact.

#include <cstdint>
#include <string>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/exact.hpp"

namespace walshlab {

/// L_n^(t) = J1 + J2 + J3, each a dyadic rational with denominator
/// dividing 2^{N+1}.
struct LebesgueBreakdown {
  Rational j1;
  Rational j2;
  Rational j3;
  Rational total;
};

/// Closed formula:
///   J1 = sum_{i<N} max(alpha_i(n), 2 alpha_i(m)) / 2^{i+1}
///   J2 = |2^{N+1} - n - 2m + 2 t_{N+1} (n - 2^N)| / 2^{N+1}
///   J3 = |n - 2m - 2 t_{N+1} (n - 2^N)| / 2^{N+1}
LebesgueBreakdown lebesgue_exact(const FrequencyIndex& n, const ConjugateParameter& t);

/// 2^{-(N+1)} sum_c |D~_n^(t)(c)| over the depth-(N+1) cylinders. |n| <= 20.
Rational lebesgue_bruteforce(const FrequencyIndex& n, const ConjugateParameter& t);

/// L_n = sum_{i<N} alpha_i(n) / 2^{i+1} + 1.
Rational lebesgue_classical(const FrequencyIndex& n);

/// The left-hand side of the monotone-structure estimate: J1 compared with
/// 2 sum_{i in A(m) u T(n,m)} max(alpha_i(n), 2 alpha_i(m)) / 2^{i+1}.
struct BlockEstimate {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};
BlockEstimate block_estimate(const FrequencyIndex& n, const ConjugateParameter& t);

struct BoundReport {
  std::uint64_t n = 1;
  int level = 0;  // N = |n|
  std::string t_digest;  // t_0 .. t_{N+1}
  std::uint64_t m = 0;
  int v_n = 0;
  int v_m = 0;
  int t_nm = 0;  // |T(n,m)|
  int t_mn = 0;  // |T(m,n)|, range i < N
  Rational lebesgue;

  Rational upper_bound;   // 2 V(m) + |T(n,m)| + 2
  Rational upper_margin;  // upper_bound - L

  // Lower-bound cores without the additive constant.
  //   stated:  max(V(n)/3 + |T(m,n)|/2, 2V(m)/3 + |T(n,m)|/4)
  //   swapped: max(V(n)/3 + |T(n,m)|/2, 2V(m)/3 + |T(m,n)|/4)
  Rational lower_core;
  Rational lower_core_swapped;
  Rational lower_slack;          // L - lower_core
  Rational lower_slack_swapped;  // L - lower_core_swapped

  /// L - (core - C) for the stated orientation.
  Rational lower_margin(const Rational& c) const { return lower_slack + c; }
  Rational lower_margin_swapped(const Rational& c) const { return lower_slack_swapped + c; }

  bool upper_ok = true;
  bool block_estimate_ok = true;

  // Classical estimates, evaluated on L_n = L_n^(0).
  Rational classical;
  bool mtk_ok = true;        // (V(n)+1)/3 <= L_n < V(n)
  bool sws_ok = true;        // V(n)/8 <= L_n <= V(n)
  bool quarter_variation_ok = true;  // L_n >= V(n)/4
};

BoundReport check_bounds(const FrequencyIndex& n, const ConjugateParameter& t);

enum class TSampling { exhaustive, random };

struct ScanConfig {
  int exp_min = 0;  // |n| range, inclusive
  int exp_max = 4;
  TSampling sampling = TSampling::exhaustive;
  std::uint64_t samples = 0;  // random mode: number of (n, t) pairs
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  bool keep_records = true;
};

inline constexpr int kScanExpCap = 20;
inline constexpr int kExhaustiveExpCap = 10;

struct ScanSummary {
  std::uint64_t records = 0;
  std::uint64_t upper_violations = 0;
  std::uint64_t lower_violations_c1 = 0;   // stated orientation, C = 1
  std::uint64_t lower_violations_c3h = 0;  // C = 3/2
  std::uint64_t lower_violations_c2 = 0;   // C = 2
  std::uint64_t lower_violations_swapped_c2 = 0;
  std::uint64_t block_estimate_violations = 0;
  std::uint64_t mtk_violations = 0;
  std::uint64_t sws_violations = 0;
  std::uint64_t quarter_variation_violations = 0;
  Rational min_lower_slack;
  Rational min_lower_slack_swapped;
  Rational max_upper_tightness;  // max L / upper_bound
  std::uint64_t min_slack_n = 0;
  std::string min_slack_t;
};

struct ScanResult {
  std::vector<BoundReport> records;  // sorted by (n, t_digest)
  ScanSummary summary;
};

/// Bound verification over a range of n. Exhaustive mode enumerates all
/// t_1 .. t_{N+1} (t_0 = 0); random mode draws `samples` pairs from the
/// seed. Output order does not depend on the thread count.
ScanResult scan(const ScanConfig& config);

/// Random (n, t) pairs with |n| in [exp_min, exp_max]; t carries N+1 random
/// bits after t_0 = 0.
std::vector<std::pair<std::uint64_t, ConjugateParameter>> sample_pairs(int exp_min, int exp_max,
                                                                      std::uint64_t count, std::uint64_t seed);

struct FejerNormScan {
  std::uint64_t n_max = 0;
  Rational max_norm;
  std::uint64_t argmax = 0;
  std::uint64_t violations = 0;  // n with ||K_n||_1 > 17/15
};

/// max_{n <= n_max} ||K_n||_1, by incremental accumulation of sum_{k<n} D_k.
FejerNormScan fejer_norm_scan(std::uint64_t n_max);

}  // namespace walshlab
