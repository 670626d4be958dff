#include "walshlab/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace walshlab {

namespace {

void check_kernel_depth(std::uint64_t n, int depth, Backend backend, const char* what) {
  if (depth < required_depth(n)) {
    throw std::invalid_argument(std::string(what) + ": depth too small to resolve the kernel");
  }
  require_depth(depth, backend, what);
}

// D_n at cylinder c by the closed form.
std::int64_t dirichlet_at(std::uint64_t n, std::uint64_t c) {
  if (n == 0) return 0;
  if (c == 0) return static_cast<std::int64_t>(n);
  const int j = std::countr_zero(c);
  if (j >= 63) return static_cast<std::int64_t>(n);
  const auto low = static_cast<std::int64_t>(n & ((std::uint64_t{1} << j) - 1));
  const std::int64_t high = bit_of(n, j) ? (std::int64_t{1} << j) : 0;
  return walsh_sign(n, c) * (low - high);
}

template <class T>
T ratio(std::int64_t num, std::int64_t den) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<double>(num) / static_cast<double>(den);
  } else {
    return Rational(num, den);
  }
}

template <class T>
CylinderFunction<T> from_numerators(int depth, const std::vector<std::int64_t>& nums, std::int64_t den) {
  std::vector<T> out(nums.size());
  for (std::size_t c = 0; c < nums.size(); ++c) out[c] = ratio<T>(nums[c], den);
  return CylinderFunction<T>(depth, std::move(out));
}

template <class T>
CylinderFunction<T> from_spectrum(int depth, std::vector<T> coeffs) {
  return fwht_inverse(Spectrum<T>{depth, std::move(coeffs)});
}

std::vector<std::int64_t> integer_synthesis(std::vector<std::int64_t> coeffs) {
  butterfly_transform<std::int64_t>(coeffs);
  return coeffs;
}

void require_count(std::uint64_t count, int depth, const char* what) {
  if (depth >= 63 || count > (std::uint64_t{1} << depth)) {
    throw std::out_of_range(std::string(what) + ": index exceeds 2^depth");
  }
}

}  // namespace

int required_depth(std::uint64_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

std::vector<std::int64_t> dirichlet_values(std::uint64_t n, int depth) {
  check_kernel_depth(n, depth, Backend::floating, "dirichlet");
  std::vector<std::int64_t> out(std::size_t{1} << depth);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = dirichlet_at(n, c);
  return out;
}

std::vector<std::int64_t> conjugate_dirichlet_values(std::uint64_t n, const ConjugateParameter& t, int depth) {
  const FrequencyIndex idx(n);
  check_kernel_depth(n, depth, Backend::floating, "conjugate_dirichlet");
  const int big_n = idx.msb();
  const std::uint64_t m = modifier(t, big_n).value;
  const std::uint64_t top = std::uint64_t{1} << big_n;
  const std::int64_t t_next = t.bit(static_cast<std::size_t>(big_n) + 1);

  std::vector<std::int64_t> out(std::size_t{1} << depth);
  for (std::size_t c = 0; c < out.size(); ++c) {
    const std::int64_t dn = dirichlet_at(n, c);
    out[c] = dn - 2 * walsh_sign(m, c) * dirichlet_at(m, c) - 2 * t_next * (dn - dirichlet_at(top, c));
  }
  return out;
}

std::vector<std::int64_t> conjugate_dirichlet_block_values(std::uint64_t n, const ConjugateParameter& t,
                                                           int depth) {
  const FrequencyIndex idx(n);
  check_kernel_depth(n, depth, Backend::floating, "conjugate_dirichlet");
  const int big_n = idx.msb();
  const std::uint64_t top = std::uint64_t{1} << big_n;

  std::vector<std::int64_t> out(std::size_t{1} << depth);
  for (std::size_t c = 0; c < out.size(); ++c) {
    std::int64_t v = 1;
    for (int i = 0; i < big_n; ++i) {
      const std::int64_t block = dirichlet_at(std::uint64_t{2} << i, c) - dirichlet_at(std::uint64_t{1} << i, c);
      v += t.sign(static_cast<std::size_t>(i) + 1) * block;
    }
    v += t.sign(static_cast<std::size_t>(big_n) + 1) * (dirichlet_at(n, c) - dirichlet_at(top, c));
    out[c] = v;
  }
  return out;
}

std::vector<std::int64_t> fejer_numerators(std::uint64_t n, int depth) {
  if (n == 0) throw std::invalid_argument("fejer kernel: n must be positive");
  check_kernel_depth(n, depth, Backend::floating, "fejer_kernel");
  std::vector<std::int64_t> coeffs(std::size_t{1} << depth, 0);
  for (std::uint64_t j = 0; j + 1 < n; ++j) coeffs[j] = static_cast<std::int64_t>(n - 1 - j);
  return integer_synthesis(std::move(coeffs));
}

std::vector<std::int64_t> conjugate_fejer_numerators(std::uint64_t n, const ConjugateParameter& t, int depth) {
  if (n == 0) throw std::invalid_argument("conjugate fejer kernel: n must be positive");
  check_kernel_depth(n, depth, Backend::floating, "conjugate_fejer_kernel");
  std::vector<std::int64_t> coeffs(std::size_t{1} << depth, 0);
  for (std::uint64_t j = 0; j + 1 < n; ++j) coeffs[j] = static_cast<std::int64_t>(n - 1 - j) * t.beta(j);
  return integer_synthesis(std::move(coeffs));
}

KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "dirichlet") return KernelKind::dirichlet;
  if (name == "conj-dirichlet") return KernelKind::conjugate_dirichlet;
  if (name == "fejer") return KernelKind::fejer;
  if (name == "conj-fejer") return KernelKind::conjugate_fejer;
  throw std::invalid_argument("unknown kernel kind '" + name + "'");
}

std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::dirichlet: return "dirichlet";
    case KernelKind::conjugate_dirichlet: return "conj-dirichlet";
    case KernelKind::fejer: return "fejer";
    case KernelKind::conjugate_fejer: return "conj-fejer";
  }
  return "dirichlet";
}

Rational KernelValues::l1_norm() const {
  BigInt total = 0;
  std::uint64_t acc = 0;
  for (auto v : numerators) {
    acc += static_cast<std::uint64_t>(abs_value(v));
    if (acc > (std::uint64_t{1} << 62)) {
      total += acc;
      acc = 0;
    }
  }
  total += acc;
  return Rational(total, BigInt(denominator) * pow2(static_cast<unsigned>(depth)));
}

ExactFunction KernelValues::to_exact() const {
  require_depth(depth, Backend::exact, "kernel values");
  return from_numerators<Rational>(depth, numerators, denominator);
}

FloatFunction KernelValues::to_float() const { return from_numerators<double>(depth, numerators, denominator); }

KernelValues materialize(const KernelSpec& spec) {
  KernelValues out;
  out.depth = spec.depth < 0 ? required_depth(spec.n) : spec.depth;
  switch (spec.kind) {
    case KernelKind::dirichlet:
      out.numerators = dirichlet_values(spec.n, out.depth);
      break;
    case KernelKind::conjugate_dirichlet:
      out.numerators = conjugate_dirichlet_values(spec.n, spec.t, out.depth);
      break;
    case KernelKind::fejer:
      out.numerators = fejer_numerators(spec.n, out.depth);
      out.denominator = static_cast<std::int64_t>(spec.n);
      break;
    case KernelKind::conjugate_fejer:
      out.numerators = conjugate_fejer_numerators(spec.n, spec.t, out.depth);
      out.denominator = static_cast<std::int64_t>(spec.n);
      break;
  }
  return out;
}

Rational fejer_l1_norm(std::uint64_t n) {
  return materialize({KernelKind::fejer, n, {}, -1}).l1_norm();
}

Rational conjugate_fejer_l1_norm(std::uint64_t n, const ConjugateParameter& t) {
  return materialize({KernelKind::conjugate_fejer, n, t, -1}).l1_norm();
}

// ---------------------------------------------------------------------------
// Backend kernels

template <class T>
CylinderFunction<T> dirichlet(std::uint64_t n, int depth, bool spectral) {
  check_kernel_depth(n, depth, backend_of<T>, "dirichlet");
  if (!spectral) return from_numerators<T>(depth, dirichlet_values(n, depth), 1);
  std::vector<T> coeffs(std::size_t{1} << depth, T(0));
  for (std::uint64_t j = 0; j < n; ++j) coeffs[j] = T(1);
  return from_spectrum<T>(depth, std::move(coeffs));
}

template <class T>
CylinderFunction<T> conjugate_dirichlet(std::uint64_t n, const ConjugateParameter& t, int depth, bool spectral) {
  check_kernel_depth(n, depth, backend_of<T>, "conjugate_dirichlet");
  if (!spectral) return from_numerators<T>(depth, conjugate_dirichlet_values(n, t, depth), 1);
  std::vector<T> coeffs(std::size_t{1} << depth, T(0));
  for (std::uint64_t j = 0; j < n; ++j) coeffs[j] = T(t.beta(j));
  return from_spectrum<T>(depth, std::move(coeffs));
}

template <class T>
CylinderFunction<T> fejer_kernel(std::uint64_t n, int depth, bool spectral) {
  check_kernel_depth(n, depth, backend_of<T>, "fejer_kernel");
  if (spectral) return from_numerators<T>(depth, fejer_numerators(n, depth), static_cast<std::int64_t>(n));
  std::vector<std::int64_t> sum(std::size_t{1} << depth, 0);
  for (std::uint64_t k = 1; k < n; ++k) {
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += dirichlet_at(k, c);
  }
  return from_numerators<T>(depth, sum, static_cast<std::int64_t>(n));
}

template <class T>
CylinderFunction<T> conjugate_fejer_kernel(std::uint64_t n, const ConjugateParameter& t, int depth,
                                           bool spectral) {
  check_kernel_depth(n, depth, backend_of<T>, "conjugate_fejer_kernel");
  if (spectral) {
    return from_numerators<T>(depth, conjugate_fejer_numerators(n, t, depth), static_cast<std::int64_t>(n));
  }
  std::vector<std::int64_t> sum(std::size_t{1} << depth, 0);
  for (std::uint64_t k = 1; k < n; ++k) {
    const auto dk = conjugate_dirichlet_values(k, t, depth);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += dk[c];
  }
  return from_numerators<T>(depth, sum, static_cast<std::int64_t>(n));
}

// ---------------------------------------------------------------------------
// Operators

template <class T>
CylinderFunction<T> partial_sum(const CylinderFunction<T>& f, std::uint64_t count) {
  require_count(count, f.depth(), "partial_sum");
  auto s = fwht_forward(f);
  for (std::size_t j = count; j < s.coeffs.size(); ++j) s.coeffs[j] = T(0);
  return fwht_inverse(s);
}

template <class T>
CylinderFunction<T> conjugate_partial_sum(const CylinderFunction<T>& f, std::uint64_t n,
                                          const ConjugateParameter& t, Beta0Convention convention) {
  require_count(n, f.depth(), "conjugate_partial_sum");
  auto s = fwht_forward(f);
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    if (j < n) {
      s.coeffs[j] *= T(t.beta(j, convention));
    } else {
      s.coeffs[j] = T(0);
    }
  }
  return fwht_inverse(s);
}

template <class T>
CylinderFunction<T> fejer_mean(const CylinderFunction<T>& f, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("fejer_mean: n must be positive");
  require_count(n, f.depth(), "fejer_mean");
  auto s = fwht_forward(f);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    s.coeffs[j] = jj + 1 < nn ? s.coeffs[j] * ratio<T>(nn - 1 - jj, nn) : T(0);
  }
  return fwht_inverse(s);
}

template <class T>
CylinderFunction<T> conjugate_fejer_mean(const CylinderFunction<T>& f, std::uint64_t n,
                                         const ConjugateParameter& t, Beta0Convention convention) {
  if (n == 0) throw std::invalid_argument("conjugate_fejer_mean: n must be positive");
  require_count(n, f.depth(), "conjugate_fejer_mean");
  auto s = fwht_forward(f);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    s.coeffs[j] = jj + 1 < nn ? s.coeffs[j] * ratio<T>((nn - 1 - jj) * t.beta(j, convention), nn) : T(0);
  }
  return fwht_inverse(s);
}

#define WALSHLAB_INSTANTIATE_KERNELS(T)                                                                      \
  template CylinderFunction<T> dirichlet<T>(std::uint64_t, int, bool);                                       \
  template CylinderFunction<T> conjugate_dirichlet<T>(std::uint64_t, const ConjugateParameter&, int, bool);  \
  template CylinderFunction<T> fejer_kernel<T>(std::uint64_t, int, bool);                                    \
  template CylinderFunction<T> conjugate_fejer_kernel<T>(std::uint64_t, const ConjugateParameter&, int,      \
                                                         bool);                                              \
  template CylinderFunction<T> partial_sum<T>(const CylinderFunction<T>&, std::uint64_t);                    \
  template CylinderFunction<T> conjugate_partial_sum<T>(const CylinderFunction<T>&, std::uint64_t,           \
                                                        const ConjugateParameter&, Beta0Convention);         \
  template CylinderFunction<T> fejer_mean<T>(const CylinderFunction<T>&, std::uint64_t);                     \
  template CylinderFunction<T> conjugate_fejer_mean<T>(const CylinderFunction<T>&, std::uint64_t,            \
                                                       const ConjugateParameter&, Beta0Convention);

WALSHLAB_INSTANTIATE_KERNELS(double)
WALSHLAB_INSTANTIATE_KERNELS(Rational)

#undef WALSHLAB_INSTANTIATE_KERNELS

}  // namespace walshlab
