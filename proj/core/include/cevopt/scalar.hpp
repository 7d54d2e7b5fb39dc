#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cevopt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Core operations are templated over a scalar type with two realizations:
// binary64 for speed and arbitrary-precision rationals for certification.
// The traits capture the few places where the two need different code.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double abs(double x) { return std::fabs(x); }
  static double ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static Rational ratio(long long num, long long den) { return Rational(num, den); }
};

// Canonical "p/q" form in lowest terms, denominator always present and positive.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Accepts "p" or "p/q" with optional sign on p. Throws std::invalid_argument
// on anything else, including a zero denominator.
inline Rational parse_fraction(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw bad();
  }
  const auto is_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!is_integer(num, true)) throw bad();
  if (!den.empty() && !is_integer(den, false)) throw bad();
  Int p{std::string(num)};
  Int q = den.empty() ? Int(1) : Int{std::string(den)};
  if (q == 0) throw bad();
  return Rational(p, q);
}

}  // namespace cevopt
