#include "walshlab/exact.hpp"

#include <stdexcept>

namespace walshlab {

BigInt pow2(unsigned exponent) {
  BigInt one = 1;
  return one << exponent;
}

Rational dyadic_rational(const BigInt& num, unsigned exponent) {
  return Rational(num, pow2(exponent));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_fraction_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace walshlab
