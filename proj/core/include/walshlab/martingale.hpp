#pragma once

// Finite-depth dyadic martingales: conditional expectations, the conjugate
// transform, maximal and square functions, and Orlicz functionals.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/walsh.hpp"

namespace walshlab {

/// E_k f, the average over depth-k cylinders, returned at the depth of f.
template <class T>
CylinderFunction<T> conditional_expectation(const CylinderFunction<T>& f, int k);

/// E_k f as a depth-k function.
template <class T>
CylinderFunction<T> conditional_expectation_compact(const CylinderFunction<T>& f, int k);

/// (f^(0), ..., f^(d)) with f^(k) stored at depth k.
template <class T>
struct DyadicMartingale {
  std::vector<CylinderFunction<T>> levels;

  int depth() const { return static_cast<int>(levels.size()) - 1; }

  static DyadicMartingale from_function(const CylinderFunction<T>& f);

  /// d_k f = f^(k) - f^(k-1) at full depth, with f^(-1) = 0.
  CylinderFunction<T> difference(int k) const;
};

/// f~^(t) = sum_{n=0}^{d} (-1)^{t_n} (E_n f - E_{n-1} f).
template <class T>
CylinderFunction<T> conjugate_transform(const CylinderFunction<T>& f, const ConjugateParameter& t);

/// E~_m^(t) f = sum_{l=0}^{m-1} (-1)^{t_l} (E_l f - E_{l-1} f); m <= depth + 1,
/// and m = depth + 1 gives the full transform.
template <class T>
CylinderFunction<T> conjugate_truncation(const CylinderFunction<T>& f, int m, const ConjugateParameter& t);

/// The same quantity as (1 - 2 t_{m-1}) E_{m-1} f - 2 sum_{l<=m-2} (t_l - t_{l+1}) E_l f.
template <class T>
CylinderFunction<T> conjugate_truncation_telescoped(const CylinderFunction<T>& f, int m,
                                                    const ConjugateParameter& t);

/// sigma~_n^(t) f split into six terms, A = |n|, r_l = (-1)^{t_l}:
///   J1 = (1/n) sum_{m=1}^{A} 2^{m-1} E~_m f
///   J2 = (1/n) sum_{m=1}^{A} r_m (2^m sigma_{2^m} f - 2^{m-1} sigma_{2^{m-1}} f)
///   J3 = -(1/n) sum_{m=1}^{A} r_m 2^{m-1} E_{m-1} f
///   J4 = ((n - 2^A)/n) sum_{l=0}^{A} r_l (E_l f - E_{l-1} f)
///   J5 = (r_{A+1}/n) (n sigma_n f - 2^A sigma_{2^A} f)
///   J6 = -(r_{A+1}/n) (n - 2^A) E_A f
/// Under the kernel convention r_0 is taken as +1.
template <class T>
struct FejerDecomposition {
  std::array<CylinderFunction<T>, 6> terms;
  CylinderFunction<T> sum() const;
};

template <class T>
FejerDecomposition<T> fejer_decomposition(const CylinderFunction<T>& f, std::uint64_t n,
                                          const ConjugateParameter& t,
                                          Beta0Convention convention = Beta0Convention::kernel);

/// f* = max_{0<=n<=d} |E_n f|.
template <class T>
CylinderFunction<T> maximal_function(const CylinderFunction<T>& f);

/// sum_{n=0}^{d} |d_n f|^2, pointwise.
template <class T>
CylinderFunction<T> square_function_squared(const CylinderFunction<T>& f);

/// ||f*||_p; p > 0.
double hp_quasinorm(const FloatFunction& f, double p);

/// ||f||_p; p > 0.
double lp_norm(const FloatFunction& f, double p);

/// E(|f| log+ |f|), natural log.
double llogl_functional(const FloatFunction& f);

struct YoungFunction {
  std::string name;
  std::function<double(double)> eval;

  double operator()(double u) const { return eval(u); }

  /// u log(1+u)
  static YoungFunction q1();
  /// u sqrt(log(1+u))
  static YoungFunction q2();
  /// u; degenerate, for checks only
  static YoungFunction linear();
};

/// Second differences Q(u-h) - 2Q(u) + Q(u+h) >= -tolerance on a uniform
/// grid of `points` interior nodes in (0, u_max).
bool convex_on_grid(const YoungFunction& q, double u_max, int points, double tolerance = 1e-12);

/// inf{k > 0 : E Q(|f|/k) <= 1}, by bisection to relative tolerance 1e-9.
/// The returned k satisfies E Q(|f|/k) <= 1.
double luxemburg_norm(const FloatFunction& f, const YoungFunction& q);

/// E Q(|f|/k).
double orlicz_modular(const FloatFunction& f, const YoungFunction& q, double k);

}  // namespace walshlab
