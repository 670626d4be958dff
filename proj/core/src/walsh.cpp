#include "walshlab/walsh.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace walshlab {

namespace {

void require_cylinder(std::uint64_t c, int depth, const char* what) {
  if (depth < 0 || depth > 63 || c >= (std::uint64_t{1} << depth)) {
    throw std::out_of_range(std::string(what) + ": cylinder index out of range");
  }
}

}  // namespace

int rademacher(int k, std::uint64_t c, int depth) {
  if (k < 0 || k >= depth) throw std::out_of_range("rademacher: level must be below the depth");
  require_cylinder(c, depth, "rademacher");
  return ((c >> k) & 1U) ? -1 : 1;
}

int walsh(std::uint64_t m, std::uint64_t c, int depth) {
  if (depth < 0 || depth > 63 || m >= (std::uint64_t{1} << depth)) {
    throw std::out_of_range("walsh: frequency out of range for depth");
  }
  require_cylinder(c, depth, "walsh");
  return walsh_sign(m, c);
}

std::vector<Rational> exact_butterfly(std::span<const Rational> values, bool divide_by_size) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;

  BigInt common = 1;
  for (const auto& v : values) {
    const BigInt& d = denominator(v);
    if (d != 1 && common % d != 0) common = common / boost::multiprecision::gcd(common, d) * d;
  }
  std::vector<BigInt> work(values.size());
  for (std::size_t c = 0; c < values.size(); ++c) {
    work[c] = numerator(values[c]) * (common / denominator(values[c]));
  }
  butterfly_transform<BigInt>(work);

  BigInt scale = common;
  if (divide_by_size) scale *= values.size();
  std::vector<Rational> out(values.size());
  for (std::size_t c = 0; c < values.size(); ++c) out[c] = Rational(work[c], scale);
  return out;
}

FloatSpectrum fwht_forward(const FloatFunction& f) {
  require_depth(f.depth(), Backend::floating, "fwht_forward");
  std::vector<double> coeffs(f.values().begin(), f.values().end());
  butterfly_transform<double>(coeffs);
  const double scale = 1.0 / static_cast<double>(coeffs.size());
  for (auto& v : coeffs) v *= scale;
  return {f.depth(), std::move(coeffs)};
}

ExactSpectrum fwht_forward(const ExactFunction& f) {
  require_depth(f.depth(), Backend::exact, "fwht_forward");
  return {f.depth(), exact_butterfly(f.values(), true)};
}

FloatFunction fwht_inverse(const FloatSpectrum& s) {
  require_depth(s.depth, Backend::floating, "fwht_inverse");
  std::vector<double> values = s.coeffs;
  butterfly_transform<double>(values);
  return FloatFunction(s.depth, std::move(values));
}

ExactFunction fwht_inverse(const ExactSpectrum& s) {
  require_depth(s.depth, Backend::exact, "fwht_inverse");
  return ExactFunction(s.depth, exact_butterfly(s.coeffs, false));
}

namespace {

template <class T>
CylinderFunction<T> convolve_impl(const CylinderFunction<T>& f, const CylinderFunction<T>& g) {
  if (f.depth() != g.depth()) throw std::invalid_argument("dyadic_convolve: depth mismatch");
  auto fs = fwht_forward(f);
  const auto gs = fwht_forward(g);
  for (std::size_t j = 0; j < fs.coeffs.size(); ++j) fs.coeffs[j] *= gs.coeffs[j];
  return fwht_inverse(fs);
}

}  // namespace

FloatFunction dyadic_convolve(const FloatFunction& f, const FloatFunction& g) { return convolve_impl(f, g); }

ExactFunction dyadic_convolve(const ExactFunction& f, const ExactFunction& g) { return convolve_impl(f, g); }

FloatFunction to_float(const ExactFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out[c] = to_double(f[c]);
  return FloatFunction(f.depth(), std::move(out));
}

ExactFunction to_exact(const CylinderFunction<std::int64_t>& f) {
  std::vector<Rational> out(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out[c] = Rational(f[c]);
  return ExactFunction(f.depth(), std::move(out));
}

}  // namespace walshlab
