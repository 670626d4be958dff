#pragma once

// Binary-expansion combinatorics of frequency indices n and of the
// conjugation parameter t in [0, 1).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "walshlab/exact.hpp"

namespace walshlab {

/// A positive integer n with bit accessors. n_{-1} reads as 0.
class FrequencyIndex {
 public:
  explicit FrequencyIndex(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  /// n_k for k >= -1; zero above the top bit and at k = -1.
  int bit(int k) const noexcept;

  /// N = |n|, so that 2^N <= n < 2^{N+1}.
  int msb() const noexcept;

  friend bool operator==(const FrequencyIndex&, const FrequencyIndex&) = default;

 private:
  std::uint64_t value_;
};

/// Bit k of a nonnegative integer, with the k = -1 convention.
inline int bit_of(std::uint64_t value, int k) noexcept {
  if (k < 0 || k >= 64) return 0;
  return static_cast<int>((value >> k) & 1U);
}

/// The modifier m built from t at level N: m_i = t_{i+1}, i < N.
struct ModifierIndex {
  std::uint64_t value = 0;
  int level = 0;

  int bit(int k) const noexcept { return bit_of(value, k); }
  friend bool operator==(const ModifierIndex&, const ModifierIndex&) = default;
};

/// Which sign multiplies the DC coefficient of a conjugate partial sum.
/// `kernel` uses +1, which makes S~_n f = f * D~_n an identity and leaves t_0
/// inert. `literal` uses (-1)^{t_0}.
enum class Beta0Convention { kernel, literal };

/// t in [0, 1) as an eventually periodic bit stream t_0 t_1 t_2 ...
/// Canonical form: an all-zero period is dropped (dyadic rationals
/// terminate in zeros), the period is primitive, and the preperiod is as
/// short as possible.
class ConjugateParameter {
 public:
  ConjugateParameter() = default;

  static ConjugateParameter from_bits(std::vector<std::uint8_t> preperiod,
                                      std::vector<std::uint8_t> period = {});

  /// p/q by binary long division; requires 0 <= p < q.
  static ConjugateParameter from_rational(std::uint64_t p, std::uint64_t q);

  /// Bits t_1..t_{count} taken from the low bits of `pattern` (t_1 = bit 0),
  /// with t_0 = 0 and zeros afterwards.
  static ConjugateParameter from_prefix_pattern(std::uint64_t pattern, int count);

  int bit(std::size_t j) const noexcept;

  /// r_j(rho(t)) = (-1)^{t_j}.
  int sign(std::size_t j) const noexcept { return bit(j) ? -1 : 1; }

  /// beta_k(t): (-1)^{t_n} for 2^{n-1} <= k < 2^n; k = 0 per convention.
  int beta(std::uint64_t k, Beta0Convention convention = Beta0Convention::kernel) const noexcept;

  const std::vector<std::uint8_t>& preperiod() const noexcept { return preperiod_; }
  const std::vector<std::uint8_t>& period() const noexcept { return period_; }

  /// Dyadic rational <=> expansion terminates in zeros.
  bool is_dyadic_rational() const noexcept { return period_.empty(); }

  /// Same stream with t_0 forced to 0. The kernel convention on t equals the
  /// literal convention on t.with_t0_cleared().
  ConjugateParameter with_t0_cleared() const;

  /// First `count` bits as a 0/1 string.
  std::string digest(std::size_t count) const;

  /// "bits:PRE(PERIOD)" in canonical form; "0" for t = 0.
  std::string to_string() const;

  /// Exact value of t.
  Rational value() const;

  friend bool operator==(const ConjugateParameter&, const ConjugateParameter&) = default;

 private:
  void canonicalize();

  std::vector<std::uint8_t> preperiod_;
  std::vector<std::uint8_t> period_;
};

/// V(n) = sum_{k>=1} |n_k - n_{k-1}| + n_0.
int variation(const FrequencyIndex& n);

/// V(m); zero for m = 0.
int variation(const ModifierIndex& m);

/// A(n) = {i >= 0 : n_i != n_{i-1}} with n_{-1} = 0. Empty for n = 0.
std::vector<int> transition_levels(std::uint64_t n);

/// alpha_j(n) = |sum_{k<j} n_k 2^k - n_j 2^j|. Valid for n = 0 and j <= 62.
std::uint64_t alpha(std::uint64_t n, int j);

/// T(a, b) over the range i = 0..level-1: levels where a changes bit and b
/// does not (a_{-1} = b_{-1} = 0).
std::vector<int> transition_set(std::uint64_t a, std::uint64_t b, int level);

/// S(n) = sum_{i in A(n)} alpha_i(n) / 2^{i+1}.
Rational weighted_sum_S(const FrequencyIndex& n);

/// True when n_e = n_{e-1} != n_{e+1}.
bool is_reducible_at(const FrequencyIndex& n, int e);

/// n(e): delete bit e, shift the bits below it up by one, bit 0 becomes 0.
/// Requires is_reducible_at(n, e).
FrequencyIndex reduce_bit(const FrequencyIndex& n, int e);

struct ReductionChain {
  std::vector<std::uint64_t> steps;  // starts with n, ends with the alternating pattern
  std::uint64_t alternating = 0;     // n' = sum_{m=1}^{s} 2^{2m-1}
};

/// Repeated reduce_bit (with removal of trailing zeros, which leaves V and S
/// unchanged) until the pattern alternates; normalized so that n'_0 = 0.
ReductionChain reduce_to_alternating(const FrequencyIndex& n);

/// n' = sum_{m=1}^{s} 2^{2m-1} = 1010...10 (binary), s >= 1.
std::uint64_t alternating_pattern(int s);

/// m = sum_{i<N} t_{i+1} 2^i.
ModifierIndex modifier(const ConjugateParameter& t, int level);

}  // namespace walshlab
