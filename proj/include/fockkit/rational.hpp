#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "fockkit/error.hpp"

namespace fockkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline Integer numerator_of(const Rational& x) {
  return boost::multiprecision::numerator(x);
}

// Largest integer not exceeding x.
inline Integer floor_of(const Rational& x) {
  Integer n = boost::multiprecision::numerator(x);
  Integer d = boost::multiprecision::denominator(x);
  Integer q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

// Exact "a/b" or "a" form; integers print without a denominator.
inline std::string to_string(const Rational& x) {
  if (is_integer(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) fail(errc::parse, "bad rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        fail(errc::parse, "bad rational '" + std::string(text) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(errc::parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace fockkit
