#include "walshlab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "walshlab/kernels.hpp"
#include "walshlab/limits.hpp"
#include "walshlab/parallel.hpp"

namespace walshlab {

BlockParameter BlockParameter::alternating() { return periodic(1, 1, 2); }

BlockParameter BlockParameter::periodic(int q1, int p1, int period) {
  if (q1 < 0 || p1 < q1 || period < 1) throw std::invalid_argument("block parameter: need 0 <= q1 <= p1, period >= 1");
  if (p1 - q1 + 1 >= period) {
    throw std::invalid_argument("block parameter: blocks must be separated by zeros (t would end in ones)");
  }
  if (q1 == p1 && q1 == 0) throw std::invalid_argument("block parameter: a one-bit block needs q1 >= 1");
  return BlockParameter(q1, p1, period);
}

int BlockParameter::q(int i) const {
  if (i < 1) throw std::out_of_range("block index starts at 1");
  return q1_ + (i - 1) * period_;
}

int BlockParameter::p(int i) const {
  if (i < 1) throw std::out_of_range("block index starts at 1");
  return p1_ + (i - 1) * period_;
}

ConjugateParameter BlockParameter::parameter() const {
  std::vector<std::uint8_t> pre(static_cast<std::size_t>(q1_), 0);
  std::vector<std::uint8_t> per(static_cast<std::size_t>(period_), 0);
  for (int j = 0; j <= p1_ - q1_; ++j) per[static_cast<std::size_t>(j)] = 1;
  return ConjugateParameter::from_bits(std::move(pre), std::move(per));
}

Rational ConstraintSet::measure() const {
  return dyadic_rational(1, static_cast<unsigned>(zeros.size() + ones.size()));
}

bool ConstraintSet::contains(std::uint64_t c) const {
  for (int k : zeros) {
    if (bit_of(c, k) != 0) return false;
  }
  for (int k : ones) {
    if (bit_of(c, k) != 1) return false;
  }
  return true;
}

namespace {

// The two coordinates pinned by block k: {low, high} with high = p_k.
std::pair<int, int> block_pins(const BlockParameter& pattern, int k) {
  const int q = pattern.q(k);
  const int p = pattern.p(k);
  return q < p ? std::pair{q, p} : std::pair{q - 1, q};
}

void require_blocks(int count, const char* what) {
  if (count < 1) throw std::invalid_argument(std::string(what) + ": block count must be at least 1");
}

}  // namespace

ConstraintSet delta_set(const BlockParameter& pattern, int a) {
  require_blocks(a, "delta_set");
  ConstraintSet s;
  s.depth = pattern.p(a) + 1;
  for (int k = 1; k <= a; ++k) {
    const auto [low, high] = block_pins(pattern, k);
    s.zeros.push_back(low);
    s.zeros.push_back(high);
  }
  return s;
}

ConstraintSet delta_tilde_set(const BlockParameter& pattern, int i) {
  require_blocks(i, "delta_tilde_set");
  ConstraintSet s;
  s.depth = pattern.p(i) + 1;
  for (int k = 1; k < i; ++k) {
    const auto [low, high] = block_pins(pattern, k);
    s.zeros.push_back(low);
    s.zeros.push_back(high);
  }
  const auto [low, high] = block_pins(pattern, i);
  s.zeros.push_back(low);
  s.ones.push_back(high);
  return s;
}

template <class T>
Counterexample<T> build_counterexample(int a, const BlockParameter& pattern) {
  require_blocks(a, "build_counterexample");
  Counterexample<T> out;
  out.a = a;
  out.t = pattern.parameter();
  out.delta = delta_set(pattern, a);
  require_depth(out.delta.depth, backend_of<T>, "build_counterexample");
  out.working_depth = 2 * pattern.p(a) + 1;
  if (out.working_depth > 62) throw ResourceCapError("build_counterexample: n out of range");
  out.n = std::uint64_t{1} << out.working_depth;
  const auto scale = static_cast<std::int64_t>(std::uint64_t{1} << (2 * a));
  out.f = out.delta.indicator(out.delta.depth, T(scale));
  return out;
}

template <class T>
T conjugate_fejer_mean_l1(const CylinderFunction<T>& f, std::uint64_t n, const ConjugateParameter& t) {
  return conjugate_fejer_mean(f, n, t).l1_norm();
}

double orlicz_lower_bound(double y, int a, const YoungFunction& q) {
  if (a < 0 || a > 30) throw std::out_of_range("orlicz_lower_bound: A out of range");
  const double u = std::ldexp(1.0, 2 * a);
  const double qu = q(u);
  if (qu < u) {
    throw std::domain_error("orlicz_lower_bound: requires Q(4^A) >= 4^A, fails for " + q.name + " at this A");
  }
  return y / (1 + qu / u);
}

std::vector<GrowthRow> growth_run(int a_max, const BlockParameter& pattern, unsigned threads, bool exact_shadow) {
  require_blocks(a_max, "growth_run");
  std::vector<GrowthRow> rows(static_cast<std::size_t>(a_max));
  parallel_for(rows.size(), threads, [&](std::uint64_t idx) {
    const int a = static_cast<int>(idx) + 1;
    const auto ce = build_counterexample<double>(a, pattern);
    require_depth(ce.working_depth, Backend::floating, "growth_run");
    GrowthRow row;
    row.a = a;
    row.n = ce.n;
    row.depth = ce.working_depth;
    row.y = conjugate_fejer_mean_l1(ce.f.lifted(ce.working_depth), ce.n, ce.t);
    if (exact_shadow && a <= kShadowMaxA) {
      const auto exact = build_counterexample<Rational>(a, pattern);
      const Rational y = conjugate_fejer_mean_l1(exact.f.lifted(exact.working_depth), exact.n, exact.t);
      row.y_exact = y;
      const double ref = to_double(y);
      row.shadow_rel_error = ref == 0 ? std::abs(row.y) : std::abs(row.y - ref) / std::abs(ref);
    }
    row.kernel_l1 = conjugate_fejer_l1_norm(ce.n, ce.t);
    row.llogl = llogl_functional(ce.f);
    row.orlicz_q1 = orlicz_lower_bound(row.y, a, YoungFunction::q1());
    row.orlicz_q2 = orlicz_lower_bound(row.y, a, YoungFunction::q2());
    rows[idx] = std::move(row);
  });
  return rows;
}

std::vector<OctaveRow> rational_sweep(const ConjugateParameter& t, int level_min, int level_max,
                                      std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (level_min < 0 || level_min > level_max) throw std::invalid_argument("rational_sweep: bad octave range");
  if (samples == 0) throw std::invalid_argument("rational_sweep: samples must be positive");
  require_depth(level_max + 1, Backend::floating, "rational_sweep");

  const Rational fejer_bound(17, 15);
  std::vector<OctaveRow> rows;
  for (int level = level_min; level <= level_max; ++level) {
    const std::uint64_t base = std::uint64_t{1} << level;
    std::vector<std::uint64_t> ns;
    if (base <= samples) {
      for (std::uint64_t n = base; n < 2 * base; ++n) ns.push_back(n);
    } else {
      std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(level + 1));
      std::set<std::uint64_t> chosen;
      while (chosen.size() < samples) chosen.insert(base + (rng() & (base - 1)));
      ns.assign(chosen.begin(), chosen.end());
    }

    std::vector<Rational> norms(ns.size());
    parallel_for(ns.size(), threads, [&](std::uint64_t i) { norms[i] = conjugate_fejer_l1_norm(ns[i], t); });

    OctaveRow row;
    row.level = level;
    row.samples = ns.size();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i == 0 || norms[i] > row.max_norm) {
        row.max_norm = norms[i];
        row.argmax = ns[i];
      }
      if (norms[i] > fejer_bound) ++row.above_fejer_bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template Counterexample<double> build_counterexample<double>(int, const BlockParameter&);
template Counterexample<Rational> build_counterexample<Rational>(int, const BlockParameter&);
template double conjugate_fejer_mean_l1<double>(const FloatFunction&, std::uint64_t, const ConjugateParameter&);
template Rational conjugate_fejer_mean_l1<Rational>(const ExactFunction&, std::uint64_t, const ConjugateParameter&);

}  // namespace walshlab
