#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "csineq/rational.hpp"

namespace csineq {

/// An element a + b*sqrt(p) of the real quadratic field Q(sqrt(p)).
/// The radicand p is context, carried by QuadField, not by the element.
struct QuadElem {
  BigRational a;  // rational part
  BigRational b;  // coefficient of sqrt(p)

  bool operator==(const QuadElem&) const = default;
};

/// true iff p >= 2 and no prime square divides p. p = 1 is rejected:
/// the two-dimensional basis {1, sqrt(p)} needs sqrt(p) irrational.
inline bool is_valid_radicand(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % (d * d) == 0) return false;
  }
  return true;
}

/// Exact arithmetic and ordering in Q(sqrt(p)) for a fixed square-free p >= 2.
class QuadField {
 public:
  explicit QuadField(std::int64_t p) : p_(p) {
    if (!is_valid_radicand(p)) {
      throw DomainError("radicand must be square-free and >= 2, got " + std::to_string(p));
    }
  }

  std::int64_t radicand() const { return p_; }

  QuadElem zero() const { return {0, 0}; }
  QuadElem one() const { return {1, 0}; }
  QuadElem sqrt_p() const { return {0, 1}; }
  QuadElem from_rational(BigRational r) const { return {std::move(r), 0}; }
  QuadElem make(BigRational a, BigRational b) const { return {std::move(a), std::move(b)}; }

  QuadElem add(const QuadElem& x, const QuadElem& y) const { return {x.a + y.a, x.b + y.b}; }
  QuadElem sub(const QuadElem& x, const QuadElem& y) const { return {x.a - y.a, x.b - y.b}; }
  QuadElem neg(const QuadElem& x) const { return {-x.a, -x.b}; }

  /// (a1 + b1 s)(a2 + b2 s) = (a1 a2 + p b1 b2) + (a1 b2 + a2 b1) s, s = sqrt(p).
  QuadElem mul(const QuadElem& x, const QuadElem& y) const {
    return {x.a * y.a + BigRational(p_) * x.b * y.b, x.a * y.b + x.b * y.a};
  }

  QuadElem square(const QuadElem& x) const { return mul(x, x); }

  QuadElem scale(const BigRational& r, const QuadElem& x) const { return {r * x.a, r * x.b}; }

  bool is_zero(const QuadElem& x) const { return x.a.is_zero() && x.b.is_zero(); }

  /// Field norm a^2 - p b^2; zero only for the zero element.
  BigRational norm(const QuadElem& x) const { return x.a * x.a - BigRational(p_) * x.b * x.b; }

  /// 1/(a + b s) = (a - b s) / (a^2 - p b^2).
  QuadElem inverse(const QuadElem& x) const {
    if (is_zero(x)) throw DomainError("zero element has no inverse");
    const BigRational n = norm(x);
    return {x.a / n, -x.b / n};
  }

  QuadElem div(const QuadElem& x, const QuadElem& y) const { return mul(x, inverse(y)); }

  /// Exact sign of the real number a + b*sqrt(p). If a and b agree in sign
  /// (or one vanishes) the sign is immediate; otherwise
  /// sign(a + b*sqrt(p)) = sign(a) * sign(a^2 - p b^2), decided by
  /// big-integer comparison. No rounding is involved anywhere.
  int sign(const QuadElem& x) const {
    const int sa = x.a.sign();
    const int sb = x.b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    return sa * norm(x).sign();
  }

  /// -1, 0, +1 as x <, =, > y in the real order.
  int compare(const QuadElem& x, const QuadElem& y) const { return sign(sub(x, y)); }

  QuadElem abs(const QuadElem& x) const { return sign(x) < 0 ? neg(x) : x; }

  BigInt height(const QuadElem& x) const {
    const BigInt ha = height_of(x.a);
    const BigInt hb = height_of(x.b);
    return ha > hb ? ha : hb;
  }

  /// "a/b + c/d*sqrt(p)", with "-" spliced in for negative sqrt coefficients.
  std::string to_string(const QuadElem& x) const {
    std::string out = fraction_string(x.a);
    if (x.b.sign() < 0) {
      out += " - " + fraction_string(-x.b);
    } else {
      out += " + " + fraction_string(x.b);
    }
    out += "*sqrt(" + std::to_string(p_) + ")";
    return out;
  }

  /// Parses "r", "r*sqrt(p)", "sqrt(p)", or a +/- combination of such terms.
  QuadElem parse(std::string_view text) const {
    QuadElem acc = zero();
    std::string token;
    int pending_sign = +1;
    bool any = false;
    auto flush = [&]() {
      if (token.empty()) {
        if (any) throw ConfigError("dangling sign in quadratic literal");
        return;
      }
      acc = add(acc, parse_term(token, pending_sign));
      token.clear();
      any = true;
    };
    int depth = 0;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t') continue;
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if ((ch == '+' || ch == '-') && depth == 0 && !token.empty()) {
        flush();
        pending_sign = ch == '-' ? -1 : +1;
        continue;
      }
      if ((ch == '+' || ch == '-') && depth == 0 && token.empty()) {
        pending_sign = ch == '-' ? -pending_sign : pending_sign;
        continue;
      }
      token.push_back(ch);
    }
    flush();
    if (!any) throw ConfigError("empty quadratic literal");
    return acc;
  }

 private:
  QuadElem parse_term(const std::string& term, int sgn) const {
    const auto pos = term.find("sqrt(");
    if (pos == std::string::npos) {
      BigRational r = parse_rational(term);
      return {sgn < 0 ? BigRational(-r) : r, 0};
    }
    if (term.back() != ')') throw ConfigError("unterminated sqrt() in quadratic literal");
    const std::string inside = term.substr(pos + 5, term.size() - pos - 6);
    BigRational radicand = parse_rational(inside);
    if (radicand != BigRational(p_)) {
      throw ConfigError("sqrt radicand " + inside + " does not match carrier p=" + std::to_string(p_));
    }
    BigRational coeff = 1;
    if (pos > 0) {
      std::string head = term.substr(0, pos);
      if (head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = parse_rational(head);
    }
    if (sgn < 0) coeff = -coeff;
    return {0, coeff};
  }

  std::int64_t p_;
};

}  // namespace csineq
