#include "walshlab/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace walshlab {

FrequencyIndex::FrequencyIndex(std::uint64_t value) : value_(value) {
  if (value == 0) throw std::invalid_argument("frequency index must be positive");
}

int FrequencyIndex::bit(int k) const noexcept { return bit_of(value_, k); }

int FrequencyIndex::msb() const noexcept { return std::bit_width(value_) - 1; }

// ---------------------------------------------------------------------------
// ConjugateParameter

ConjugateParameter ConjugateParameter::from_bits(std::vector<std::uint8_t> preperiod,
                                                 std::vector<std::uint8_t> period) {
  auto valid = [](std::uint8_t b) { return b <= 1; };
  if (!std::all_of(preperiod.begin(), preperiod.end(), valid) ||
      !std::all_of(period.begin(), period.end(), valid)) {
    throw std::invalid_argument("conjugation parameter bits must be 0 or 1");
  }
  if (!period.empty() && std::all_of(period.begin(), period.end(), [](std::uint8_t b) { return b == 1; })) {
    throw std::invalid_argument(
        "expansion ending in all ones is not canonical; use the terminating expansion");
  }
  ConjugateParameter t;
  t.preperiod_ = std::move(preperiod);
  t.period_ = std::move(period);
  t.canonicalize();
  return t;
}

ConjugateParameter ConjugateParameter::from_rational(std::uint64_t p, std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("conjugation parameter: zero denominator");
  if (p >= q) throw std::invalid_argument("conjugation parameter must lie in [0, 1)");
  // Remainders stay below q; 2r < 2^64 needs q <= 2^63.
  if (q > (std::uint64_t{1} << 63)) throw std::invalid_argument("conjugation parameter: denominator too large");

  std::vector<std::uint8_t> bits;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::uint64_t r = p;
  while (r != 0) {
    if (auto it = seen.find(r); it != seen.end()) {
      std::vector<std::uint8_t> pre(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<std::uint8_t> per(bits.begin() + static_cast<std::ptrdiff_t>(it->second), bits.end());
      return from_bits(std::move(pre), std::move(per));
    }
    seen.emplace(r, bits.size());
    r *= 2;
    if (r >= q) {
      bits.push_back(1);
      r -= q;
    } else {
      bits.push_back(0);
    }
  }
  return from_bits(std::move(bits));
}

ConjugateParameter ConjugateParameter::from_prefix_pattern(std::uint64_t pattern, int count) {
  std::vector<std::uint8_t> pre(static_cast<std::size_t>(count) + 1, 0);
  for (int i = 0; i < count; ++i) pre[static_cast<std::size_t>(i) + 1] = static_cast<std::uint8_t>(bit_of(pattern, i));
  return from_bits(std::move(pre));
}

void ConjugateParameter::canonicalize() {
  if (std::all_of(period_.begin(), period_.end(), [](std::uint8_t b) { return b == 0; })) period_.clear();

  if (!period_.empty()) {
    const std::size_t len = period_.size();
    for (std::size_t d = 1; d < len; ++d) {
      if (len % d != 0) continue;
      bool repeats = true;
      for (std::size_t i = d; i < len && repeats; ++i) repeats = period_[i] == period_[i - d];
      if (repeats) {
        period_.resize(d);
        break;
      }
    }
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      preperiod_.pop_back();
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
  } else {
    while (!preperiod_.empty() && preperiod_.back() == 0) preperiod_.pop_back();
  }
}

int ConjugateParameter::bit(std::size_t j) const noexcept {
  if (j < preperiod_.size()) return preperiod_[j];
  if (period_.empty()) return 0;
  return period_[(j - preperiod_.size()) % period_.size()];
}

int ConjugateParameter::beta(std::uint64_t k, Beta0Convention convention) const noexcept {
  if (k == 0) return convention == Beta0Convention::kernel ? 1 : sign(0);
  return sign(static_cast<std::size_t>(std::bit_width(k)));
}

ConjugateParameter ConjugateParameter::with_t0_cleared() const {
  if (bit(0) == 0) return *this;
  std::vector<std::uint8_t> pre = preperiod_;
  std::vector<std::uint8_t> per = period_;
  if (pre.empty()) {
    // Unroll one period so position 0 lives in the preperiod.
    pre.assign(per.begin(), per.end());
  }
  pre[0] = 0;
  return from_bits(std::move(pre), std::move(per));
}

std::string ConjugateParameter::digest(std::size_t count) const {
  std::string out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(bit(j) ? '1' : '0');
  return out;
}

std::string ConjugateParameter::to_string() const {
  if (preperiod_.empty() && period_.empty()) return "0";
  std::string out = "bits:";
  for (auto b : preperiod_) out.push_back(b ? '1' : '0');
  if (!period_.empty()) {
    out.push_back('(');
    for (auto b : period_) out.push_back(b ? '1' : '0');
    out.push_back(')');
  }
  return out;
}

Rational ConjugateParameter::value() const {
  const auto pre_len = static_cast<unsigned>(preperiod_.size());
  BigInt pre = 0;
  for (auto b : preperiod_) pre = pre * 2 + b;
  Rational result(pre, pow2(pre_len));
  if (!period_.empty()) {
    const auto per_len = static_cast<unsigned>(period_.size());
    BigInt block = 0;
    for (auto b : period_) block = block * 2 + b;
    result += Rational(block, (pow2(per_len) - 1) * pow2(pre_len));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Combinatorics of n

int variation(const FrequencyIndex& n) {
  int v = n.bit(0);
  for (int k = 1; k <= n.msb() + 1; ++k) v += n.bit(k) != n.bit(k - 1) ? 1 : 0;
  return v;
}

int variation(const ModifierIndex& m) {
  if (m.value == 0) return 0;
  return variation(FrequencyIndex(m.value));
}

std::vector<int> transition_levels(std::uint64_t n) {
  std::vector<int> out;
  const int top = std::bit_width(n);  // n_{top} = 0 and n_{top-1} = 1 when n > 0
  for (int i = 0; i <= top; ++i) {
    if (bit_of(n, i) != bit_of(n, i - 1)) out.push_back(i);
  }
  return out;
}

std::uint64_t alpha(std::uint64_t n, int j) {
  if (j < 0 || j > 62) throw std::out_of_range("alpha: level out of range");
  const std::uint64_t low = n & ((std::uint64_t{1} << j) - 1);
  const std::uint64_t high = bit_of(n, j) ? (std::uint64_t{1} << j) : 0;
  return low > high ? low - high : high - low;
}

std::vector<int> transition_set(std::uint64_t a, std::uint64_t b, int level) {
  std::vector<int> out;
  for (int i = 0; i < level; ++i) {
    if (bit_of(a, i) != bit_of(a, i - 1) && bit_of(b, i) == bit_of(b, i - 1)) out.push_back(i);
  }
  return out;
}

Rational weighted_sum_S(const FrequencyIndex& n) {
  // Common denominator 2^{top+1} where top is the largest level in A(n).
  const auto levels = transition_levels(n.value());
  const int top = levels.back();
  BigInt numerator = 0;
  for (int i : levels) numerator += BigInt(alpha(n.value(), i)) << (top - i);
  return dyadic_rational(numerator, static_cast<unsigned>(top + 1));
}

bool is_reducible_at(const FrequencyIndex& n, int e) {
  if (e < 0 || e > 62) return false;
  return n.bit(e) == n.bit(e - 1) && n.bit(e) != n.bit(e + 1);
}

FrequencyIndex reduce_bit(const FrequencyIndex& n, int e) {
  if (!is_reducible_at(n, e)) {
    throw std::invalid_argument("reduce_bit: requires n_e = n_{e-1} != n_{e+1}");
  }
  const std::uint64_t v = n.value();
  const std::uint64_t above = v & ~((std::uint64_t{2} << e) - 1);  // bits > e
  const std::uint64_t below = v & ((std::uint64_t{1} << e) - 1);   // bits < e
  return FrequencyIndex(above | (below << 1));
}

std::uint64_t alternating_pattern(int s) {
  if (s < 1 || s > 31) throw std::out_of_range("alternating_pattern: s out of range");
  std::uint64_t out = 0;
  for (int m = 1; m <= s; ++m) out |= std::uint64_t{1} << (2 * m - 1);
  return out;
}

ReductionChain reduce_to_alternating(const FrequencyIndex& n) {
  ReductionChain chain;
  chain.steps.push_back(n.value());
  std::uint64_t current = n.value() >> std::countr_zero(n.value());
  for (;;) {
    // current is odd here; the top of any run of length >= 2 is reducible and
    // the reduction changes the value.
    const FrequencyIndex idx(current);
    int e = -1;
    for (int k = 1; k <= idx.msb(); ++k) {
      if (is_reducible_at(idx, k)) {
        e = k;
        break;
      }
    }
    if (e < 0) break;
    const std::uint64_t next = reduce_bit(idx, e).value();
    chain.steps.push_back(next);
    current = next >> std::countr_zero(next);
  }
  chain.alternating = current << 1;
  if (chain.steps.back() != chain.alternating) chain.steps.push_back(chain.alternating);
  return chain;
}

ModifierIndex modifier(const ConjugateParameter& t, int level) {
  if (level < 0 || level > 63) throw std::out_of_range("modifier: level out of range");
  ModifierIndex m;
  m.level = level;
  for (int i = 0; i < level; ++i) {
    if (t.bit(static_cast<std::size_t>(i) + 1)) m.value |= std::uint64_t{1} << i;
  }
  return m;
}

}  // namespace walshlab
