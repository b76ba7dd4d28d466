#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "csineq/errors.hpp"

namespace csineq {

// Exact scalars. BigRational is kept in canonical form by the backend:
// gcd(|num|, den) = 1 and den > 0 after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Builds num/den, normalizing the denominator sign. Throws on den = 0.
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRational(std::move(num), std::move(den));
}

inline int sign_of(const BigRational& r) { return r.sign(); }

inline BigRational abs_of(const BigRational& r) {
  return r.sign() < 0 ? BigRational(-r) : r;
}

/// Height of a reduced fraction: max(|numerator|, denominator).
inline BigInt height_of(const BigRational& r) {
  BigInt n = boost::multiprecision::abs(numerator(r));
  const BigInt d = denominator(r);
  return n > d ? n : d;
}

/// 10^k with k of either sign, as an exact rational.
inline BigRational pow10(int k) {
  BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k < 0 ? -k : k));
  return k < 0 ? make_rational(1, p) : BigRational(p);
}

/// Serializes as "num/den", always with an explicit denominator.
inline std::string fraction_string(const BigRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "n", "n/d" or "-n/d". Whitespace around tokens is ignored.
inline BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    if (s.empty()) throw ConfigError("empty integer in rational literal");
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw ConfigError("sign without digits in rational literal");
    BigInt value = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw ConfigError("invalid rational literal");
      value = value * 10 + (ch - '0');
    }
    return neg ? BigInt(-value) : value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw ConfigError("zero denominator in rational literal");
  return make_rational(std::move(num), std::move(den));
}

}  // namespace csineq
