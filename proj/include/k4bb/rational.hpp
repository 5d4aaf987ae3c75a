#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace k4bb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic everywhere a bound or density is compared.
// Decimal output is display-only and never feeds back into a comparison.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Parses "7", "-3/4", "0.25" or "1e-4" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse rational: '" + text + "'");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  auto digits = [&](BigInt& out) {
    std::size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      out = out * 10 + (text[i++] - '0');
    return i > start;
  };
  BigInt num;
  if (!digits(num)) throw bad();
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0 || i != text.size()) throw bad();
    return Rational(neg ? -num : num, den);
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t start = i;
    BigInt frac;
    if (!digits(frac)) throw bad();
    for (std::size_t k = start; k < i; ++k) den *= 10;
    num = num * den + frac;
  }
  long long exp = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    BigInt e;
    if (!digits(e) || e > 9999) throw bad();
    exp = static_cast<long long>(e);
    if (eneg) exp = -exp;
  }
  if (i != text.size()) throw bad();
  for (long long k = 0; k < exp; ++k) num *= 10;
  for (long long k = 0; k > exp; --k) den *= 10;
  return Rational(neg ? -num : num, den);
}

/// Fixed-point decimal rendering, truncated toward zero.
inline std::string to_decimal_string(const Rational& r, int digits = 12) {
  BigInt num = rat_num(r);
  BigInt den = rat_den(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = sign + whole.str();
  if (rem == 0) return out;
  out += '.';
  for (int k = 0; k < digits && rem != 0; ++k) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  if (rem != 0) out += "...";
  return out;
}

inline BigInt floor_rational(const Rational& r) {
  BigInt num = rat_num(r), den = rat_den(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

/// Least integer s >= 0 with s*s >= r (r >= 0); used for sqrt-valued thresholds.
inline long long ceil_sqrt(const Rational& r) {
  if (r <= 0) return 0;
  long long lo = 0, hi = 1;
  while (Rational(hi) * hi < r) hi *= 2;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (Rational(mid) * mid >= r)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace k4bb
