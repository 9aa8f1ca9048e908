#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ietlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

/// Floor of a rational as an integer.
inline Int rational_floor(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

/// Parses "123", "-4/7", "0.25" style literals. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Parses a decimal string "d.ddd..." into (value, number of fraction digits).
/// Used for symbol witnesses; the digit count bounds the usable precision.
struct DecimalWitness {
  Rational value;
  int fraction_digits = 0;
};
DecimalWitness parse_decimal_witness(const std::string& text);

/// The rational with smallest denominator in the open interval (lo, hi),
/// by Stern-Brocot descent. Requires lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Canonical text form: "n" or "n/d".
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

}  // namespace ietlab
