#pragma once

// The block-parameter counterexample family f_A = 4^A 1_{Delta_A}, growth of
// E|sigma~_n f_A|, rational-t sweeps of conjugate Fejer kernel norms, and the
// Orlicz lower bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/martingale.hpp"
#include "walshlab/walsh.hpp"

namespace walshlab {

/// Blocks 0 <= q_1 <= p_1 < q_2 <= p_2 < ...; t_j = 1 iff q_i <= j <= p_i.
/// Blocks repeat with period P: q_i = q_1 + (i-1)P, p_i = p_1 + (i-1)P.
class BlockParameter {
 public:
  /// q_i = p_i = 2i - 1, so t = 0.010101..._2 = 1/3.
  static BlockParameter alternating();

  /// Requires q1 <= p1, p1 - q1 + 1 < period (otherwise t ends in ones),
  /// and q1 >= 1 when q1 = p1.
  static BlockParameter periodic(int q1, int p1, int period);

  int q(int i) const;  // i >= 1
  int p(int i) const;

  int q1() const noexcept { return q1_; }
  int p1() const noexcept { return p1_; }
  int period() const noexcept { return period_; }

  ConjugateParameter parameter() const;

 private:
  BlockParameter(int q1, int p1, int period) : q1_(q1), p1_(p1), period_(period) {}
  int q1_;
  int p1_;
  int period_;
};

/// Cylinder-index constraints: listed coordinates pinned, the rest free.
struct ConstraintSet {
  int depth = 0;
  std::vector<int> zeros;
  std::vector<int> ones;

  /// 2^{-(number of pinned coordinates)}.
  Rational measure() const;
  bool contains(std::uint64_t c) const;

  template <class T>
  CylinderFunction<T> indicator(int at_depth, const T& value) const {
    if (at_depth < depth) throw std::invalid_argument("constraint set: depth too small");
    auto out = CylinderFunction<T>::zero(at_depth);
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (contains(c)) out[c] = value;
    }
    return out;
  }
};

/// Delta_A: for each block k <= A the pins are x_{q_k} = x_{p_k} = 0; when
/// q_k = p_k the second pin moves to x_{q_k - 1}. Depth p_A + 1.
ConstraintSet delta_set(const BlockParameter& pattern, int a);

/// Delta~_i: blocks k < i pinned as in Delta_A; in block i the pin at p_i
/// is 1 and the other (q_i, or q_i - 1 when q_i = p_i) is 0. Depth p_i + 1.
ConstraintSet delta_tilde_set(const BlockParameter& pattern, int i);

template <class T>
struct Counterexample {
  int a = 0;
  ConjugateParameter t;
  ConstraintSet delta;
  CylinderFunction<T> f;  // 4^A 1_{Delta_A} at depth p_A + 1
  std::uint64_t n = 0;    // 2^{2 p_A + 1}
  int working_depth = 0;  // 2 p_A + 1
};

template <class T>
Counterexample<T> build_counterexample(int a, const BlockParameter& pattern = BlockParameter::alternating());

/// E|sigma~_n^(t) f| with f lifted to `depth`, by spectral multiplier.
template <class T>
T conjugate_fejer_mean_l1(const CylinderFunction<T>& f, std::uint64_t n, const ConjugateParameter& t);

/// y / (1 + Q(4^A) 4^{-A}); requires Q(4^A) >= 4^A.
double orlicz_lower_bound(double y, int a, const YoungFunction& q);

struct GrowthRow {
  int a = 0;
  std::uint64_t n = 0;
  int depth = 0;
  double y = 0;                  // float backend
  std::optional<Rational> y_exact;  // exact shadow, small A
  double shadow_rel_error = 0;
  Rational kernel_l1;            // ||K~_n^(t)||_1, exact
  double llogl = 0;
  double orlicz_q1 = 0;
  double orlicz_q2 = 0;
};

inline constexpr int kShadowMaxA = 3;

/// One row per A = 1..a_max, ordered by A.
std::vector<GrowthRow> growth_run(int a_max, const BlockParameter& pattern = BlockParameter::alternating(),
                                  unsigned threads = 0, bool exact_shadow = true);

struct OctaveRow {
  int level = 0;  // n in [2^N, 2^{N+1})
  std::uint64_t samples = 0;
  Rational max_norm;
  std::uint64_t argmax = 0;
  std::uint64_t above_fejer_bound = 0;  // values > 17/15
};

/// Per-octave maxima of ||K~_n^(t)||_1 over `samples` distinct seeded n per
/// octave (all n when the octave is smaller). Exact int64 arithmetic.
std::vector<OctaveRow> rational_sweep(const ConjugateParameter& t, int level_min, int level_max,
                                      std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace walshlab
