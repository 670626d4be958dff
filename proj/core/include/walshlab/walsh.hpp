#pragma once

// Functions on the depth-d truncation of the dyadic group and their
// Walsh-Paley spectra.
//
// Cylinder index c = sum_k x_k 2^k, so bit k of c is the coordinate x_k and
// w_m(c) = (-1)^{popcount(m & c)}. The plain tensor-product butterfly is then
// already in Walsh-Paley order.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "walshlab/exact.hpp"
#include "walshlab/limits.hpp"

namespace walshlab {

template <class T>
inline constexpr Backend backend_of = std::is_same_v<T, double> ? Backend::floating : Backend::exact;

template <class T>
class CylinderFunction {
 public:
  CylinderFunction() = default;

  CylinderFunction(int depth, std::vector<T> values) : depth_(depth), values_(std::move(values)) {
    if (depth < 0 || depth > 40) throw std::invalid_argument("cylinder function: bad depth");
    if (values_.size() != (std::size_t{1} << depth)) {
      throw std::invalid_argument("cylinder function: expected 2^depth values");
    }
  }

  static CylinderFunction zero(int depth) { return CylinderFunction(depth, std::vector<T>(std::size_t{1} << depth, T(0))); }

  static CylinderFunction constant(int depth, const T& value) {
    return CylinderFunction(depth, std::vector<T>(std::size_t{1} << depth, value));
  }

  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return values_.size(); }

  const T& operator[](std::size_t c) const { return values_[c]; }
  T& operator[](std::size_t c) { return values_[c]; }

  std::span<const T> values() const noexcept { return values_; }
  std::span<T> values() noexcept { return values_; }

  /// E f = 2^{-d} sum_c f(c).
  T integral() const {
    T sum(0);
    for (const auto& v : values_) sum += v;
    return sum / T(size());
  }

  /// E|f|.
  T l1_norm() const {
    T sum(0);
    for (const auto& v : values_) sum += abs_value(v);
    return sum / T(size());
  }

  /// The same function viewed at a finer depth; the new coordinates
  /// x_d..x_{d'-1} are free, so values repeat with period 2^d.
  CylinderFunction lifted(int new_depth) const {
    if (new_depth < depth_) throw std::invalid_argument("lift: target depth below current depth");
    std::vector<T> out(std::size_t{1} << new_depth);
    const std::size_t mask = size() - 1;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = values_[c & mask];
    return CylinderFunction(new_depth, std::move(out));
  }

  CylinderFunction& operator+=(const CylinderFunction& other) {
    require_same_depth(other);
    for (std::size_t c = 0; c < size(); ++c) values_[c] += other.values_[c];
    return *this;
  }

  CylinderFunction& operator-=(const CylinderFunction& other) {
    require_same_depth(other);
    for (std::size_t c = 0; c < size(); ++c) values_[c] -= other.values_[c];
    return *this;
  }

  CylinderFunction& operator*=(const T& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
  }

  friend CylinderFunction operator+(CylinderFunction a, const CylinderFunction& b) { return a += b; }
  friend CylinderFunction operator-(CylinderFunction a, const CylinderFunction& b) { return a -= b; }
  friend CylinderFunction operator*(CylinderFunction a, const T& s) { return a *= s; }
  friend CylinderFunction operator*(const T& s, CylinderFunction a) { return a *= s; }

  friend bool operator==(const CylinderFunction&, const CylinderFunction&) = default;

 private:
  void require_same_depth(const CylinderFunction& other) const {
    if (other.depth_ != depth_) throw std::invalid_argument("cylinder functions of different depth");
  }

  int depth_ = 0;
  std::vector<T> values_{T(0)};
};

/// Walsh-Paley coefficients f^(j) = E(f w_j), j < 2^d.
template <class T>
struct Spectrum {
  int depth = 0;
  std::vector<T> coeffs;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

using ExactFunction = CylinderFunction<Rational>;
using FloatFunction = CylinderFunction<double>;
using ExactSpectrum = Spectrum<Rational>;
using FloatSpectrum = Spectrum<double>;

/// r_k(c) = (-1)^{x_k}; requires k < depth and c < 2^depth.
int rademacher(int k, std::uint64_t c, int depth);

/// w_m(c) = (-1)^{sum_k m_k x_k}; requires m, c < 2^depth.
int walsh(std::uint64_t m, std::uint64_t c, int depth);

/// Unchecked w_m(c).
inline int walsh_sign(std::uint64_t m, std::uint64_t c) noexcept { return (std::popcount(m & c) & 1) ? -1 : 1; }

/// Unnormalized in-place transform: a[j] <- sum_c a[c] w_j(c). Iterative,
/// d passes of size-2 butterflies. The size must be a power of two.
template <class T>
void butterfly_transform(std::span<T> a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("butterfly_transform: size must be a power of two");
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        T x = a[j];
        T y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

/// Exact transform over rationals: shared denominator, BigInt butterflies,
/// symbolic division by `divide_by_size ? 2^d : 1`.
std::vector<Rational> exact_butterfly(std::span<const Rational> values, bool divide_by_size);

FloatSpectrum fwht_forward(const FloatFunction& f);
ExactSpectrum fwht_forward(const ExactFunction& f);
FloatFunction fwht_inverse(const FloatSpectrum& s);
ExactFunction fwht_inverse(const ExactSpectrum& s);

/// (f * g)(x) = E_s f(x + s) g(s), through the coefficient product.
FloatFunction dyadic_convolve(const FloatFunction& f, const FloatFunction& g);
ExactFunction dyadic_convolve(const ExactFunction& f, const ExactFunction& g);

/// Exact <-> float conversion.
FloatFunction to_float(const ExactFunction& f);
ExactFunction to_exact(const CylinderFunction<std::int64_t>& f);

}  // namespace walshlab
