#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace walshlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt pow2(unsigned exponent);

/// num / 2^exponent, reduced.
Rational dyadic_rational(const BigInt& num, unsigned exponent);

Rational make_rational(const BigInt& num, const BigInt& den);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

/// Always "p/q", also for integers ("3/1"). Used by the CSV schema.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }
inline double abs_value(double value) { return value < 0 ? -value : value; }
inline std::int64_t abs_value(std::int64_t value) { return value < 0 ? -value : value; }

}  // namespace walshlab
