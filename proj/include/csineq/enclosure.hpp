#pragma once

#include <string>
#include <string_view>

#include "csineq/interval.hpp"
#include "csineq/rational.hpp"

namespace csineq {

enum class AnalyticFn { Sin, Cos, Sinh, Cosh };

inline std::string to_string(AnalyticFn fn) {
  switch (fn) {
    case AnalyticFn::Sin: return "sin";
    case AnalyticFn::Cos: return "cos";
    case AnalyticFn::Sinh: return "sinh";
    case AnalyticFn::Cosh: return "cosh";
  }
  return "?";
}

namespace detail {

/// Certified Taylor evaluation at rational x >= 0. Returns the exact partial
/// sum and a rational bound on the dropped tail: once the term ratio
/// rho = x^2 / (q1 q2) falls below 1, every later ratio is smaller, so the
/// tail is at most |next| / (1 - rho) by comparison with a geometric series.
struct TaylorTail {
  BigRational partial_sum;
  BigRational tail_bound;  // >= |true value - partial_sum|; one-sided for sinh/cosh
};

inline TaylorTail taylor_with_tail(AnalyticFn fn, const BigRational& x, const BigRational& eps) {
  const bool alternating = fn == AnalyticFn::Sin || fn == AnalyticFn::Cos;
  const bool odd = fn == AnalyticFn::Sin || fn == AnalyticFn::Sinh;
  const BigRational x2 = x * x;

  BigRational term = odd ? x : BigRational(1);  // |current term|
  long order = odd ? 1 : 0;                     // degree of current term
  BigRational sum(0);
  int parity = +1;

  constexpr int kMaxTerms = 512;
  for (int it = 0; it < kMaxTerms; ++it) {
    sum += alternating && parity < 0 ? BigRational(-term) : term;
    parity = -parity;
    const BigRational q1(order + 1);
    const BigRational q2(order + 2);
    const BigRational rho = x2 / (q1 * q2);
    const BigRational next = term * rho;
    if (rho < 1) {
      const BigRational tail = next / (BigRational(1) - rho);
      if (tail <= eps) return {sum, tail};
    }
    term = next;
    order += 2;
  }
  throw PrecisionError("enclosure did not reach requested precision within term cap");
}

}  // namespace detail

/// Rigorous enclosure of fn(x) with rational endpoints and width exactly
/// 10^-digits (or a point interval at x = 0). The certified error of the
/// returned center is at most 10^-digits / 4, so enclosures at higher
/// `digits` are nested inside enclosures at lower `digits`.
///
/// Domain: |x| <= 8. No argument reduction is performed; endpoints stay
/// rational because pi never enters the computation.
inline RationalInterval enclose_analytic(AnalyticFn fn, const BigRational& x, int digits) {
  if (digits < 1) throw DomainError("precision digits must be >= 1");
  if (abs_of(x) > 8) throw DomainError("enclosure argument outside documented domain |x| <= 8");
  const bool odd = fn == AnalyticFn::Sin || fn == AnalyticFn::Sinh;
  if (x.is_zero()) {
    return RationalInterval::point(odd ? BigRational(0) : BigRational(1));
  }
  const bool negate = x.sign() < 0 && odd;  // sin/sinh odd, cos/cosh even
  const BigRational ax = abs_of(x);

  const BigRational eps = pow10(-digits) / 4;
  const auto [sum, tail] = detail::taylor_with_tail(fn, ax, eps);

  // sin/cos: value in [sum - tail, sum + tail]; sinh/cosh: in [sum, sum + tail].
  const bool one_sided = fn == AnalyticFn::Sinh || fn == AnalyticFn::Cosh;
  const BigRational center = one_sided ? sum + tail / 2 : sum;

  const BigRational radius = pow10(-digits) / 2;
  RationalInterval out{center - radius, center + radius};
  return negate ? -out : out;
}

}  // namespace csineq
