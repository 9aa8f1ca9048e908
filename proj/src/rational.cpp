#include "ietlab/rational.hpp"

#include <cctype>

namespace ietlab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix;
// strip leading zeros before converting decimal digit strings
Int digits_to_int(const std::string& s) {
  size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return Int(s.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds))
      throw std::invalid_argument("bad rational literal: " + text);
    Int n = digits_to_int(ns), d = digits_to_int(ds);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    auto w = parse_decimal_witness(s);
    value = w.value;
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad rational literal: " + text);
    value = Rational(digits_to_int(s));
  }
  return neg ? Rational(-value) : value;
}

DecimalWitness parse_decimal_witness(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string ipart = s, fpart;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    ipart = s.substr(0, dot);
    fpart = s.substr(dot + 1);
  }
  if (ipart.empty()) ipart = "0";
  if (!all_digits(ipart) || (!fpart.empty() && !all_digits(fpart)))
    throw std::invalid_argument("bad decimal literal: " + text);
  Int scale = 1;
  for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
  Int n = digits_to_int(ipart) * scale + (fpart.empty() ? Int(0) : digits_to_int(fpart));
  DecimalWitness w;
  w.value = Rational(neg ? -n : n, scale);
  w.fraction_digits = static_cast<int>(fpart.size());
  return w;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  // Classical continued-fraction style recursion on (lo, hi).
  Int fl = rational_floor(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);  // an integer fits
  if (lo < Rational(fl + 1) && Rational(fl + 1) < hi) return Rational(fl + 1);
  Rational lo_frac = lo - Rational(fl), hi_frac = hi - Rational(fl);
  if (lo_frac == 0) {
    // lo is an integer; answer is fl + 1/k for the smallest valid k.
    Int k = rational_floor(Rational(1) / hi_frac) + 1;
    return Rational(fl) + Rational(Int(1), k);
  }
  Rational inner = simplest_rational_between(Rational(1) / hi_frac, Rational(1) / lo_frac);
  return Rational(fl) + Rational(1) / inner;
}

std::string rational_to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ietlab
