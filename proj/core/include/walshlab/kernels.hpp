#pragma once

// Dirichlet, conjugate Dirichlet, Fejer and conjugate Fejer kernels, and the
// operators they generate.
//
// Every kernel here is integer-valued after multiplying by its natural
// denominator (1 for Dirichlet kernels, n for Fejer kernels), so values are
// produced as int64 numerators and converted to a backend on request.

#include <cstdint>
#include <string>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/walsh.hpp"

namespace walshlab {

/// Smallest depth at which every w_k, k < n, is measurable: bit_width(n-1).
int required_depth(std::uint64_t n);

/// D_n by the closed form: on I_j \ I_{j+1},
/// D_n = w_n (sum_{k<j} n_k 2^k - n_j 2^j); on the zero cylinder D_n = n.
/// n = 0 gives the zero function.
std::vector<std::int64_t> dirichlet_values(std::uint64_t n, int depth);

/// D~_n^(t) = D_n - 2 w_m D_m - 2 t_{N+1} (D_n - D_{2^N}).
std::vector<std::int64_t> conjugate_dirichlet_values(std::uint64_t n, const ConjugateParameter& t, int depth);

/// 1 + sum_{i<N} (-1)^{t_{i+1}} (D_{2^{i+1}} - D_{2^i}) + (-1)^{t_{N+1}} (D_n - D_{2^N}).
std::vector<std::int64_t> conjugate_dirichlet_block_values(std::uint64_t n, const ConjugateParameter& t,
                                                           int depth);

/// n K_n = sum_{k<n} D_k, through the integer spectrum (n-1-j).
std::vector<std::int64_t> fejer_numerators(std::uint64_t n, int depth);

/// n K~_n^(t) = sum_{0<k<n} D~_k^(t), through the integer spectrum
/// (n-1-j) beta_j(t) with beta_0 = +1.
std::vector<std::int64_t> conjugate_fejer_numerators(std::uint64_t n, const ConjugateParameter& t, int depth);

enum class KernelKind { dirichlet, conjugate_dirichlet, fejer, conjugate_fejer };

KernelKind parse_kernel_kind(const std::string& name);
std::string kernel_kind_name(KernelKind kind);

struct KernelSpec {
  KernelKind kind = KernelKind::dirichlet;
  std::uint64_t n = 1;
  ConjugateParameter t;
  int depth = -1;  // -1: required_depth(n)
};

/// Kernel values as numerators over one common integer denominator.
struct KernelValues {
  int depth = 0;
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;

  /// ||kernel||_1 = sum |num| / (denominator 2^depth).
  Rational l1_norm() const;
  ExactFunction to_exact() const;
  FloatFunction to_float() const;
};

KernelValues materialize(const KernelSpec& spec);

/// ||K_n||_1 exactly.
Rational fejer_l1_norm(std::uint64_t n);

/// ||K~_n^(t)||_1 exactly (int64 arithmetic, any depth up to the float cap).
Rational conjugate_fejer_l1_norm(std::uint64_t n, const ConjugateParameter& t);

// Kernels on a backend. `spectral` builds them from the coefficient
// sequence and an inverse transform; otherwise the closed form is used.

template <class T>
CylinderFunction<T> dirichlet(std::uint64_t n, int depth, bool spectral = false);

template <class T>
CylinderFunction<T> conjugate_dirichlet(std::uint64_t n, const ConjugateParameter& t, int depth,
                                        bool spectral = false);

template <class T>
CylinderFunction<T> fejer_kernel(std::uint64_t n, int depth, bool spectral = false);

template <class T>
CylinderFunction<T> conjugate_fejer_kernel(std::uint64_t n, const ConjugateParameter& t, int depth,
                                           bool spectral = false);

// Operators on CylinderFunction, realized as spectral multipliers.

/// S_M f = sum_{i<M} f^(i) w_i; requires M <= 2^depth.
template <class T>
CylinderFunction<T> partial_sum(const CylinderFunction<T>& f, std::uint64_t count);

/// S~_n^(t) f = sum_{k<n} beta_k(t) f^(k) w_k.
template <class T>
CylinderFunction<T> conjugate_partial_sum(const CylinderFunction<T>& f, std::uint64_t n,
                                          const ConjugateParameter& t,
                                          Beta0Convention convention = Beta0Convention::kernel);

/// sigma_n f = (1/n) sum_{k<n} S_k f.
template <class T>
CylinderFunction<T> fejer_mean(const CylinderFunction<T>& f, std::uint64_t n);

/// sigma~_n^(t) f = (1/n) sum_{k<n} S~_k^(t) f, with S~_0 f = 0.
template <class T>
CylinderFunction<T> conjugate_fejer_mean(const CylinderFunction<T>& f, std::uint64_t n,
                                         const ConjugateParameter& t,
                                         Beta0Convention convention = Beta0Convention::kernel);

}  // namespace walshlab
