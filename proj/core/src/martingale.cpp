#include "walshlab/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "walshlab/kernels.hpp"

namespace walshlab {

namespace {

template <class T>
T scalar(std::int64_t num, std::int64_t den) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<double>(num) / static_cast<double>(den);
  } else {
    return Rational(num, den);
  }
}

void require_level(int k, int depth, const char* what) {
  if (k < 0 || k > depth) throw std::out_of_range(std::string(what) + ": level exceeds depth");
}

// e[l] = E_l f at depth l, l = 0..top.
template <class T>
std::vector<CylinderFunction<T>> compact_levels(const CylinderFunction<T>& f, int top) {
  std::vector<CylinderFunction<T>> e;
  e.reserve(static_cast<std::size_t>(top) + 1);
  for (int l = 0; l <= top; ++l) e.push_back(conditional_expectation_compact(f, l));
  return e;
}

// E_l f(c) read from the compact level, with E_{-1} f = 0.
template <class T>
T level_value(const std::vector<CylinderFunction<T>>& e, int l, std::size_t c) {
  if (l < 0) return T(0);
  return e[static_cast<std::size_t>(l)][c & (e[static_cast<std::size_t>(l)].size() - 1)];
}

}  // namespace

template <class T>
CylinderFunction<T> conditional_expectation_compact(const CylinderFunction<T>& f, int k) {
  require_level(k, f.depth(), "conditional_expectation");
  std::vector<T> out(std::size_t{1} << k, T(0));
  const std::size_t mask = out.size() - 1;
  for (std::size_t c = 0; c < f.size(); ++c) out[c & mask] += f[c];
  const T count(static_cast<std::int64_t>(f.size() >> k));
  for (auto& v : out) v /= count;
  return CylinderFunction<T>(k, std::move(out));
}

template <class T>
CylinderFunction<T> conditional_expectation(const CylinderFunction<T>& f, int k) {
  return conditional_expectation_compact(f, k).lifted(f.depth());
}

template <class T>
DyadicMartingale<T> DyadicMartingale<T>::from_function(const CylinderFunction<T>& f) {
  DyadicMartingale out;
  out.levels = compact_levels(f, f.depth());
  return out;
}

template <class T>
CylinderFunction<T> DyadicMartingale<T>::difference(int k) const {
  require_level(k, depth(), "martingale difference");
  auto out = levels[static_cast<std::size_t>(k)].lifted(depth());
  if (k > 0) out -= levels[static_cast<std::size_t>(k) - 1].lifted(depth());
  return out;
}

template <class T>
CylinderFunction<T> conjugate_transform(const CylinderFunction<T>& f, const ConjugateParameter& t) {
  return conjugate_truncation(f, f.depth() + 1, t);
}

template <class T>
CylinderFunction<T> conjugate_truncation(const CylinderFunction<T>& f, int m, const ConjugateParameter& t) {
  if (m < 0 || m > f.depth() + 1) throw std::out_of_range("conjugate_truncation: level exceeds depth");
  auto out = CylinderFunction<T>::zero(f.depth());
  if (m == 0) return out;
  const auto e = compact_levels(f, m - 1);
  for (std::size_t c = 0; c < f.size(); ++c) {
    T v(0);
    for (int l = 0; l < m; ++l) {
      const T diff = level_value(e, l, c) - level_value(e, l - 1, c);
      if (t.bit(static_cast<std::size_t>(l))) {
        v -= diff;
      } else {
        v += diff;
      }
    }
    out[c] = v;
  }
  return out;
}

template <class T>
CylinderFunction<T> conjugate_truncation_telescoped(const CylinderFunction<T>& f, int m,
                                                    const ConjugateParameter& t) {
  if (m < 0 || m > f.depth() + 1) throw std::out_of_range("conjugate_truncation: level exceeds depth");
  auto out = CylinderFunction<T>::zero(f.depth());
  if (m == 0) return out;
  const auto e = compact_levels(f, m - 1);
  const auto bit = [&](int l) { return static_cast<std::int64_t>(t.bit(static_cast<std::size_t>(l))); };
  for (std::size_t c = 0; c < f.size(); ++c) {
    T v = T(1 - 2 * bit(m - 1)) * level_value(e, m - 1, c);
    for (int l = 0; l + 2 <= m; ++l) {
      const std::int64_t w = bit(l) - bit(l + 1);
      if (w != 0) v -= T(2 * w) * level_value(e, l, c);
    }
    out[c] = v;
  }
  return out;
}

template <class T>
CylinderFunction<T> FejerDecomposition<T>::sum() const {
  auto out = terms[0];
  for (std::size_t j = 1; j < terms.size(); ++j) out += terms[j];
  return out;
}

template <class T>
FejerDecomposition<T> fejer_decomposition(const CylinderFunction<T>& f, std::uint64_t n,
                                          const ConjugateParameter& t, Beta0Convention convention) {
  const FrequencyIndex idx(n);
  const int a = idx.msb();
  if (a + 1 > f.depth()) throw std::invalid_argument("fejer_decomposition: depth must be at least |n| + 1");

  const ConjugateParameter tt = convention == Beta0Convention::kernel ? t.with_t0_cleared() : t;
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t top = std::int64_t{1} << a;
  const auto r = [&](int l) { return static_cast<std::int64_t>(tt.sign(static_cast<std::size_t>(l))); };
  const int d = f.depth();

  FejerDecomposition<T> out;
  for (auto& term : out.terms) term = CylinderFunction<T>::zero(d);

  // sigma_{2^m} f for m = 0..A, scaled by 2^m.
  std::vector<CylinderFunction<T>> scaled_sigma;
  for (int m = 0; m <= a; ++m) {
    const std::int64_t p = std::int64_t{1} << m;
    scaled_sigma.push_back(fejer_mean(f, static_cast<std::uint64_t>(p)) * T(p));
  }

  for (int m = 1; m <= a; ++m) {
    const std::int64_t half = std::int64_t{1} << (m - 1);
    out.terms[0] += conjugate_truncation(f, m, tt) * scalar<T>(half, nn);
    out.terms[1] += (scaled_sigma[static_cast<std::size_t>(m)] - scaled_sigma[static_cast<std::size_t>(m) - 1]) *
                    scalar<T>(r(m), nn);
    out.terms[2] += conditional_expectation(f, m - 1) * scalar<T>(-r(m) * half, nn);
  }
  out.terms[3] = conjugate_truncation(f, a + 1, tt) * scalar<T>(nn - top, nn);
  out.terms[4] = (fejer_mean(f, n) * T(nn) - scaled_sigma[static_cast<std::size_t>(a)]) * scalar<T>(r(a + 1), nn);
  out.terms[5] = conditional_expectation(f, a) * scalar<T>(-r(a + 1) * (nn - top), nn);
  return out;
}

template <class T>
CylinderFunction<T> maximal_function(const CylinderFunction<T>& f) {
  const auto e = compact_levels(f, f.depth());
  auto out = CylinderFunction<T>::zero(f.depth());
  for (std::size_t c = 0; c < f.size(); ++c) {
    T best(0);
    for (int l = 0; l <= f.depth(); ++l) best = std::max(best, T(abs_value(level_value(e, l, c))));
    out[c] = best;
  }
  return out;
}

template <class T>
CylinderFunction<T> square_function_squared(const CylinderFunction<T>& f) {
  const auto e = compact_levels(f, f.depth());
  auto out = CylinderFunction<T>::zero(f.depth());
  for (std::size_t c = 0; c < f.size(); ++c) {
    T v(0);
    for (int l = 0; l <= f.depth(); ++l) {
      const T diff = level_value(e, l, c) - level_value(e, l - 1, c);
      v += diff * diff;
    }
    out[c] = v;
  }
  return out;
}

double lp_norm(const FloatFunction& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be positive");
  double sum = 0;
  for (double v : f.values()) sum += std::pow(std::abs(v), p);
  return std::pow(sum / static_cast<double>(f.size()), 1.0 / p);
}

double hp_quasinorm(const FloatFunction& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("hp_quasinorm: p must be positive");
  return lp_norm(maximal_function(f), p);
}

double llogl_functional(const FloatFunction& f) {
  double sum = 0;
  for (double v : f.values()) {
    const double a = std::abs(v);
    if (a > 1) sum += a * std::log(a);
  }
  return sum / static_cast<double>(f.size());
}

YoungFunction YoungFunction::q1() {
  return {"u*log(1+u)", [](double u) { return u * std::log1p(u); }};
}

YoungFunction YoungFunction::q2() {
  return {"u*sqrt(log(1+u))", [](double u) { return u * std::sqrt(std::log1p(u)); }};
}

YoungFunction YoungFunction::linear() {
  return {"u", [](double u) { return u; }};
}

bool convex_on_grid(const YoungFunction& q, double u_max, int points, double tolerance) {
  if (points < 1 || !(u_max > 0)) throw std::invalid_argument("convex_on_grid: bad grid");
  const double h = u_max / (points + 1);
  for (int i = 1; i <= points; ++i) {
    const double u = i * h;
    const double second = q(u - h) - 2 * q(u) + q(u + h);
    if (second < -tolerance * std::max(1.0, std::abs(q(u)))) return false;
  }
  return true;
}

double orlicz_modular(const FloatFunction& f, const YoungFunction& q, double k) {
  double sum = 0;
  for (double v : f.values()) sum += q(std::abs(v) / k);
  return sum / static_cast<double>(f.size());
}

double luxemburg_norm(const FloatFunction& f, const YoungFunction& q) {
  double peak = 0;
  for (double v : f.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0) return 0;

  double hi = peak;
  while (orlicz_modular(f, q, hi) > 1) hi *= 2;
  double lo = hi;
  while (orlicz_modular(f, q, lo) <= 1) {
    lo /= 2;
    if (lo < peak * 1e-300) return hi;
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (orlicz_modular(f, q, mid) <= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

#define WALSHLAB_INSTANTIATE_MARTINGALE(T)                                                                     \
  template CylinderFunction<T> conditional_expectation<T>(const CylinderFunction<T>&, int);                    \
  template CylinderFunction<T> conditional_expectation_compact<T>(const CylinderFunction<T>&, int);            \
  template struct DyadicMartingale<T>;                                                                         \
  template CylinderFunction<T> conjugate_transform<T>(const CylinderFunction<T>&, const ConjugateParameter&);  \
  template CylinderFunction<T> conjugate_truncation<T>(const CylinderFunction<T>&, int,                         \
                                                       const ConjugateParameter&);                             \
  template CylinderFunction<T> conjugate_truncation_telescoped<T>(const CylinderFunction<T>&, int,             \
                                                                  const ConjugateParameter&);                  \
  template struct FejerDecomposition<T>;                                                                       \
  template FejerDecomposition<T> fejer_decomposition<T>(const CylinderFunction<T>&, std::uint64_t,             \
                                                        const ConjugateParameter&, Beta0Convention);           \
  template CylinderFunction<T> maximal_function<T>(const CylinderFunction<T>&);                                \
  template CylinderFunction<T> square_function_squared<T>(const CylinderFunction<T>&);

WALSHLAB_INSTANTIATE_MARTINGALE(double)
WALSHLAB_INSTANTIATE_MARTINGALE(Rational)

#undef WALSHLAB_INSTANTIATE_MARTINGALE

}  // namespace walshlab
