#pragma once

// Slow reference computations, written from the definitions and sharing no
// code paths with the library beyond the container types.

#include <cstdint>
#include <random>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/exact.hpp"
#include "walshlab/walsh.hpp"

namespace walshlab::oracle {

/// prod_k r_k(c)^{m_k}, one coordinate at a time.
inline int walsh_product(std::uint64_t m, std::uint64_t c) {
  int sign = 1;
  for (int k = 0; k < 64; ++k) {
    if (((m >> k) & 1U) && ((c >> k) & 1U)) sign = -sign;
  }
  return sign;
}

inline int nth_bit(std::uint64_t v, int k) { return k < 0 || k >= 64 ? 0 : static_cast<int>((v >> k) & 1U); }

inline int top_bit(std::uint64_t n) {
  int k = -1;
  while (k + 1 < 64 && (n >> (k + 1)) != 0) ++k;
  return k;
}

/// beta_k(t): +1 for k = 0, else (-1)^{t_j} with 2^{j-1} <= k < 2^j.
inline int beta(std::uint64_t k, const ConjugateParameter& t) {
  if (k == 0) return 1;
  return t.bit(static_cast<std::size_t>(top_bit(k) + 1)) ? -1 : 1;
}

/// sum_{k<n} w_k(c).
inline std::vector<std::int64_t> dirichlet(std::uint64_t n, int depth) {
  std::vector<std::int64_t> out(std::size_t{1} << depth, 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::uint64_t k = 0; k < n; ++k) out[c] += walsh_product(k, c);
  }
  return out;
}

/// sum_{k<n} beta_k(t) w_k(c).
inline std::vector<std::int64_t> conjugate_dirichlet(std::uint64_t n, const ConjugateParameter& t, int depth) {
  std::vector<std::int64_t> out(std::size_t{1} << depth, 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::uint64_t k = 0; k < n; ++k) out[c] += beta(k, t) * walsh_product(k, c);
  }
  return out;
}

/// E|D~_n| at depth |n| + 1 by summing over every cylinder.
inline Rational lebesgue(std::uint64_t n, const ConjugateParameter& t) {
  const int depth = top_bit(n) + 2;
  const auto v = conjugate_dirichlet(n, t, depth);
  std::int64_t sum = 0;
  for (auto x : v) sum += x < 0 ? -x : x;
  return Rational(sum, static_cast<std::int64_t>(v.size()));
}

/// sum_{i<N} alpha_i(n) / 2^{i+1} + 1, with alpha from its definition.
inline Rational classical_lebesgue(std::uint64_t n) {
  const int top = top_bit(n);
  Rational sum(1);
  for (int i = 0; i < top; ++i) {
    std::int64_t low = 0;
    for (int k = 0; k < i; ++k) low += static_cast<std::int64_t>(nth_bit(n, k)) << k;
    const std::int64_t a = low - (static_cast<std::int64_t>(nth_bit(n, i)) << i);
    sum += Rational(a < 0 ? -a : a, std::int64_t{1} << (i + 1));
  }
  return sum;
}

/// Number of sign changes in n_{-1} n_0 n_1 ... with n_{-1} = 0.
inline int variation(std::uint64_t n) {
  int count = 0;
  for (int k = 0; k <= 64; ++k) {
    if (nth_bit(n, k) != nth_bit(n, k - 1)) ++count;
  }
  return count;
}

template <class T>
std::vector<T> spectrum(const CylinderFunction<T>& f) {
  std::vector<T> out(f.size(), T(0));
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (std::size_t c = 0; c < f.size(); ++c) out[j] += f[c] * T(walsh_product(j, c));
    out[j] /= T(static_cast<std::int64_t>(f.size()));
  }
  return out;
}

/// (f * g)(x) = E_y f(y) g(x xor y).
template <class T>
CylinderFunction<T> convolve(const CylinderFunction<T>& f, const CylinderFunction<T>& g) {
  auto out = CylinderFunction<T>::zero(f.depth());
  for (std::size_t x = 0; x < f.size(); ++x) {
    T sum(0);
    for (std::size_t y = 0; y < f.size(); ++y) sum += f[y] * g[x ^ y];
    out[x] = sum / T(static_cast<std::int64_t>(f.size()));
  }
  return out;
}

/// Average of f over the points sharing the first k coordinates with x.
template <class T>
CylinderFunction<T> block_average(const CylinderFunction<T>& f, int k) {
  auto out = CylinderFunction<T>::zero(f.depth());
  const std::size_t mask = (std::size_t{1} << k) - 1;
  for (std::size_t x = 0; x < f.size(); ++x) {
    T sum(0);
    std::int64_t count = 0;
    for (std::size_t y = 0; y < f.size(); ++y) {
      if ((x & mask) == (y & mask)) {
        sum += f[y];
        ++count;
      }
    }
    out[x] = sum / T(count);
  }
  return out;
}

/// sum_k c_k w_k evaluated pointwise.
template <class T>
CylinderFunction<T> synthesize(const std::vector<T>& coeffs, int depth) {
  auto out = CylinderFunction<T>::zero(depth);
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != T(0)) out[c] += coeffs[k] * T(walsh_product(k, c));
    }
  }
  return out;
}

/// (1/n) sum_{k<n} S~_k f, each partial sum built from direct coefficients.
inline ExactFunction conjugate_fejer_mean(const ExactFunction& f, std::uint64_t n, const ConjugateParameter& t) {
  const auto coeffs = spectrum(f);
  std::vector<Rational> acc(f.size(), Rational(0));
  for (std::uint64_t k = 1; k < n; ++k) {
    for (std::uint64_t j = 0; j < k; ++j) acc[j] += coeffs[j] * Rational(beta(j, t));
  }
  for (auto& v : acc) v /= Rational(static_cast<std::int64_t>(n));
  return synthesize(acc, f.depth());
}

inline ExactFunction random_integer_function(int depth, std::mt19937_64& rng, int spread = 8) {
  std::vector<Rational> v(std::size_t{1} << depth);
  for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread);
  return ExactFunction(depth, std::move(v));
}

inline FloatFunction random_float_function(int depth, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(std::size_t{1} << depth);
  for (auto& x : v) x = dist(rng);
  return FloatFunction(depth, std::move(v));
}

/// t with t_0 = 0 and the next `bits` bits random, then zeros.
inline ConjugateParameter random_parameter(int bits, std::mt19937_64& rng) {
  std::vector<std::uint8_t> pre(static_cast<std::size_t>(bits) + 1, 0);
  for (int j = 1; j <= bits; ++j) pre[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(rng() & 1U);
  return ConjugateParameter::from_bits(std::move(pre));
}

}  // namespace walshlab::oracle
