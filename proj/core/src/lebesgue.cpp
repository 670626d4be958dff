#include "walshlab/lebesgue.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "walshlab/kernels.hpp"
#include "walshlab/limits.hpp"
#include "walshlab/parallel.hpp"

namespace walshlab {

namespace {

// Numerators of J1, J2, J3 over 2^{N+1}. int64 is enough up to N = 56.
template <class Int>
void breakdown_numerators(const FrequencyIndex& n, std::uint64_t m, int t_next, Int& j1, Int& j2, Int& j3) {
  const int big_n = n.msb();
  j1 = 0;
  for (int i = 0; i < big_n; ++i) {
    const std::uint64_t a = std::max(alpha(n.value(), i), 2 * alpha(m, i));
    j1 += Int(a) << (big_n - i);
  }
  const Int nn(n.value());
  const Int mm(m);
  const Int top = Int(1) << big_n;
  const Int shift = Int(2 * t_next) * (nn - top);
  j2 = 2 * top - nn - 2 * mm + shift;
  j3 = nn - 2 * mm - shift;
  if (j2 < 0) j2 = -j2;
  if (j3 < 0) j3 = -j3;
}

constexpr int kInt64BreakdownLevel = 56;

std::uint64_t max_term(std::uint64_t n, std::uint64_t m, int i) {
  return std::max(alpha(n, i), 2 * alpha(m, i));
}

}  // namespace

LebesgueBreakdown lebesgue_exact(const FrequencyIndex& n, const ConjugateParameter& t) {
  const int big_n = n.msb();
  const std::uint64_t m = modifier(t, big_n).value;
  const int t_next = t.bit(static_cast<std::size_t>(big_n) + 1);
  const auto den = static_cast<unsigned>(big_n + 1);

  LebesgueBreakdown out;
  if (big_n <= kInt64BreakdownLevel) {
    std::int64_t j1 = 0, j2 = 0, j3 = 0;
    breakdown_numerators<std::int64_t>(n, m, t_next, j1, j2, j3);
    out.j1 = dyadic_rational(j1, den);
    out.j2 = dyadic_rational(j2, den);
    out.j3 = dyadic_rational(j3, den);
    out.total = dyadic_rational(BigInt(j1) + j2 + j3, den);
  } else {
    BigInt j1, j2, j3;
    breakdown_numerators<BigInt>(n, m, t_next, j1, j2, j3);
    out.j1 = dyadic_rational(j1, den);
    out.j2 = dyadic_rational(j2, den);
    out.j3 = dyadic_rational(j3, den);
    out.total = dyadic_rational(j1 + j2 + j3, den);
  }
  return out;
}

Rational lebesgue_bruteforce(const FrequencyIndex& n, const ConjugateParameter& t) {
  const int depth = n.msb() + 1;
  if (depth > 21) throw ResourceCapError("lebesgue_bruteforce: |n| must be at most 20");
  const auto values = conjugate_dirichlet_values(n.value(), t, depth);
  std::int64_t sum = 0;
  for (auto v : values) sum += abs_value(v);
  return dyadic_rational(sum, static_cast<unsigned>(depth));
}

Rational lebesgue_classical(const FrequencyIndex& n) {
  const int big_n = n.msb();
  BigInt num = 0;
  for (int i = 0; i < big_n; ++i) num += BigInt(alpha(n.value(), i)) << (big_n - i);
  return dyadic_rational(num, static_cast<unsigned>(big_n + 1)) + 1;
}

BlockEstimate block_estimate(const FrequencyIndex& n, const ConjugateParameter& t) {
  const int big_n = n.msb();
  const std::uint64_t m = modifier(t, big_n).value;
  const auto den = static_cast<unsigned>(big_n + 1);

  BigInt lhs = 0;
  for (int i = 0; i < big_n; ++i) lhs += BigInt(max_term(n.value(), m, i)) << (big_n - i);

  std::vector<int> levels = transition_levels(m);
  for (int i : transition_set(n.value(), m, big_n)) levels.push_back(i);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  BigInt rhs = 0;
  for (int i : levels) rhs += BigInt(max_term(n.value(), m, i)) << (big_n - i);

  return {dyadic_rational(lhs, den), dyadic_rational(2 * rhs, den)};
}

BoundReport check_bounds(const FrequencyIndex& n, const ConjugateParameter& t) {
  BoundReport r;
  r.n = n.value();
  r.level = n.msb();
  r.t_digest = t.digest(static_cast<std::size_t>(r.level) + 2);
  const ModifierIndex mod = modifier(t, r.level);
  r.m = mod.value;
  r.v_n = variation(n);
  r.v_m = variation(mod);
  r.t_nm = static_cast<int>(transition_set(r.n, r.m, r.level).size());
  r.t_mn = static_cast<int>(transition_set(r.m, r.n, r.level).size());
  r.lebesgue = lebesgue_exact(n, t).total;

  r.upper_bound = Rational(2 * r.v_m + r.t_nm + 2);
  r.upper_margin = r.upper_bound - r.lebesgue;
  r.upper_ok = r.upper_margin >= 0;

  const Rational third_vn(r.v_n, 3);
  const Rational two_thirds_vm(2 * r.v_m, 3);
  r.lower_core = std::max(third_vn + Rational(r.t_mn, 2), two_thirds_vm + Rational(r.t_nm, 4));
  r.lower_core_swapped = std::max(third_vn + Rational(r.t_nm, 2), two_thirds_vm + Rational(r.t_mn, 4));
  r.lower_slack = r.lebesgue - r.lower_core;
  r.lower_slack_swapped = r.lebesgue - r.lower_core_swapped;

  r.block_estimate_ok = block_estimate(n, t).holds();

  r.classical = lebesgue_classical(n);
  const Rational v(r.v_n);
  r.mtk_ok = Rational(r.v_n + 1, 3) <= r.classical && r.classical < v;
  r.sws_ok = v / 8 <= r.classical && r.classical <= v;
  r.quarter_variation_ok = r.classical >= v / 4;
  return r;
}

namespace {

struct Job {
  std::uint64_t n;
  std::uint64_t pattern;  // t_1 .. t_{N+1} in bits 0 .. N
};

std::uint64_t reversed_pattern(const Job& job) {
  const int bits = std::bit_width(job.n) + 1;  // N + 2 bits: t_0 .. t_{N+1}; t_0 = 0
  std::uint64_t out = 0;
  for (int k = 0; k + 1 < bits; ++k) out |= static_cast<std::uint64_t>(bit_of(job.pattern, k)) << (bits - 2 - k);
  return out;
}

void sort_jobs(std::vector<Job>& jobs) {
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    if (a.n != b.n) return a.n < b.n;
    return reversed_pattern(a) < reversed_pattern(b);
  });
}

std::vector<Job> random_jobs(int exp_min, int exp_max, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(exp_max - exp_min + 1);
  std::vector<Job> jobs;
  jobs.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    const int big_n = exp_min + static_cast<int>(rng() % span);
    const std::uint64_t low = big_n == 0 ? 0 : rng() & ((std::uint64_t{1} << big_n) - 1);
    const std::uint64_t pattern = rng() & ((std::uint64_t{2} << big_n) - 1);
    jobs.push_back({(std::uint64_t{1} << big_n) | low, pattern});
  }
  return jobs;
}

void validate(const ScanConfig& config) {
  if (config.exp_min < 0 || config.exp_min > config.exp_max) throw std::invalid_argument("scan: bad exponent range");
  if (config.exp_max > kScanExpCap) throw ResourceCapError("scan: exponent above 20");
  if (config.sampling == TSampling::exhaustive && config.exp_max > kExhaustiveExpCap) {
    throw ResourceCapError("scan: exhaustive t only for |n| <= 10");
  }
}

void absorb(ScanSummary& s, const BoundReport& r) {
  const bool first = s.records == 0;
  ++s.records;
  if (!r.upper_ok) ++s.upper_violations;
  if (r.lower_margin(1) < 0) ++s.lower_violations_c1;
  if (r.lower_margin(Rational(3, 2)) < 0) ++s.lower_violations_c3h;
  if (r.lower_margin(2) < 0) ++s.lower_violations_c2;
  if (r.lower_margin_swapped(2) < 0) ++s.lower_violations_swapped_c2;
  if (!r.block_estimate_ok) ++s.block_estimate_violations;
  if (!r.mtk_ok) ++s.mtk_violations;
  if (!r.sws_ok) ++s.sws_violations;
  if (!r.quarter_variation_ok) ++s.quarter_variation_violations;
  const Rational tightness = r.lebesgue / r.upper_bound;
  if (first || r.lower_slack < s.min_lower_slack) {
    s.min_lower_slack = r.lower_slack;
    s.min_slack_n = r.n;
    s.min_slack_t = r.t_digest;
  }
  if (first || r.lower_slack_swapped < s.min_lower_slack_swapped) s.min_lower_slack_swapped = r.lower_slack_swapped;
  if (first || tightness > s.max_upper_tightness) s.max_upper_tightness = tightness;
}

}  // namespace

std::vector<std::pair<std::uint64_t, ConjugateParameter>> sample_pairs(int exp_min, int exp_max,
                                                                      std::uint64_t count, std::uint64_t seed) {
  if (exp_min < 0 || exp_min > exp_max || exp_max > 62) throw std::invalid_argument("sample_pairs: bad range");
  std::vector<std::pair<std::uint64_t, ConjugateParameter>> out;
  out.reserve(count);
  for (const auto& job : random_jobs(exp_min, exp_max, count, seed)) {
    out.emplace_back(job.n, ConjugateParameter::from_prefix_pattern(job.pattern, std::bit_width(job.n)));
  }
  return out;
}

ScanResult scan(const ScanConfig& config) {
  validate(config);

  std::vector<Job> jobs;
  if (config.sampling == TSampling::exhaustive) {
    for (int big_n = config.exp_min; big_n <= config.exp_max; ++big_n) {
      for (std::uint64_t n = std::uint64_t{1} << big_n; n < (std::uint64_t{2} << big_n); ++n) {
        for (std::uint64_t p = 0; p < (std::uint64_t{2} << big_n); ++p) jobs.push_back({n, p});
      }
    }
  } else {
    jobs = random_jobs(config.exp_min, config.exp_max, config.samples, config.seed);
  }
  sort_jobs(jobs);

  ScanResult result;
  constexpr std::size_t kChunk = 1 << 14;
  std::vector<BoundReport> slots;
  for (std::size_t begin = 0; begin < jobs.size(); begin += kChunk) {
    const std::size_t end = std::min(jobs.size(), begin + kChunk);
    slots.assign(end - begin, BoundReport{});
    parallel_for(end - begin, config.threads, [&](std::uint64_t i) {
      const Job& job = jobs[begin + i];
      const auto t = ConjugateParameter::from_prefix_pattern(job.pattern, std::bit_width(job.n));
      slots[i] = check_bounds(FrequencyIndex(job.n), t);
    });
    for (auto& r : slots) {
      absorb(result.summary, r);
      if (config.keep_records) result.records.push_back(std::move(r));
    }
  }
  return result;
}

FejerNormScan fejer_norm_scan(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("fejer_norm_scan: n_max must be positive");
  const int depth = required_depth(n_max);
  require_depth(depth, Backend::exact, "fejer_norm_scan");
  const std::size_t size = std::size_t{1} << depth;

  // running[c] = sum_{k<n} D_k(c) = n K_n(c)
  std::vector<std::int64_t> running(size, 0);
  FejerNormScan out;
  out.n_max = n_max;
  std::int64_t best_sum = 0;
  std::uint64_t best_n = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::int64_t sum = 0;
    for (auto v : running) sum += abs_value(v);
    // ||K_n||_1 = sum / (n 2^depth); compare with 17/15 and the best so far.
    if (15 * sum > 17 * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(size)) ++out.violations;
    if (BigInt(sum) * best_n > BigInt(best_sum) * n) {
      best_sum = sum;
      best_n = n;
    }
    if (n == n_max) break;
    const auto dn = dirichlet_values(n, depth);
    for (std::size_t c = 0; c < size; ++c) running[c] += dn[c];
  }
  out.argmax = best_n;
  out.max_norm = Rational(BigInt(best_sum), BigInt(best_n) * BigInt(size));
  return out;
}

}  // namespace walshlab
