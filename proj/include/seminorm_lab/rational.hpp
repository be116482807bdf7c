#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seminorm_lab {

// Exact rational scalar. GMP keeps values canonical: positive denominator,
// gcd(|num|, den) = 1.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// 1-based coordinate index into a sequence.
using Index = std::int64_t;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

inline Rational abs_val(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// 2^exp for any integer exponent.
inline Rational pow2(long exp) {
  if (exp >= 0) return Rational(Integer(1) << exp);
  return Rational(1, Integer(1) << (-exp));
}

/// "p/q", with "/q" omitted when q = 1.
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  auto is_int = [](std::string_view v) {
    if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!is_int(num_part)) fail();
  Integer num{std::string(num_part)};
  if (slash == std::string_view::npos) return Rational(num);
  const std::string_view den_part = text.substr(slash + 1);
  if (!is_int(den_part)) fail();
  Integer den{std::string(den_part)};
  if (den == 0) fail();
  return Rational(num, den);
}

inline double approx(const Rational& r) { return r.convert_to<double>(); }

}  // namespace seminorm_lab
