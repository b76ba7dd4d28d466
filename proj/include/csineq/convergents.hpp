#pragma once

#include <cstdint>
#include <vector>

#include "csineq/quadratic.hpp"
#include "csineq/rational.hpp"

namespace csineq {

/// One continued-fraction convergent h/k of sqrt(p).
struct Convergent {
  BigInt h;
  BigInt k;

  BigRational value() const { return make_rational(h, k); }
};

/// First `count` continued-fraction convergents of sqrt(p), starting at the
/// integer part h0/k0 = floor(sqrt(p))/1. Uses the classical recurrence for
/// quadratic irrationals: m' = d*a - m, d' = (p - m'^2)/d,
/// a' = floor((a0 + m')/d'), with h_n = a_n h_{n-1} + h_{n-2} and likewise k.
inline std::vector<Convergent> sqrt_convergent_seq(std::int64_t p, int count) {
  if (!is_valid_radicand(p)) {
    throw DomainError("convergents need a square-free radicand >= 2, got " + std::to_string(p));
  }
  if (count < 1) throw DomainError("convergent count must be >= 1");

  const BigInt a0 = boost::multiprecision::sqrt(BigInt(p));
  BigInt m = 0, d = 1, a = a0;
  BigInt h_prev = 1, h = a0;
  BigInt k_prev = 0, k = 1;

  std::vector<Convergent> out;
  out.push_back({h, k});
  for (int n = 1; n < count; ++n) {
    m = d * a - m;
    d = (BigInt(p) - m * m) / d;
    a = (a0 + m) / d;
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    out.push_back({h, k});
  }
  return out;
}

inline std::vector<BigRational> sqrt_convergents(std::int64_t p, int count) {
  std::vector<BigRational> out;
  for (const auto& c : sqrt_convergent_seq(p, count)) out.push_back(c.value());
  return out;
}

/// Exact certificate that |r - sqrt(p)| < bound, decided entirely by the
/// squared-comparison sign rule of QuadField (no rounding).
inline bool certified_within(const QuadField& field, const BigRational& r, const BigRational& bound) {
  // r - sqrt(p) as an element of Q(sqrt(p)).
  const QuadElem diff = field.make(r, -1);
  const QuadElem upper = field.sub(diff, field.from_rational(bound));   // diff - bound < 0
  const QuadElem lower = field.add(diff, field.from_rational(bound));   // diff + bound > 0
  return field.sign(upper) < 0 && field.sign(lower) > 0;
}

/// Certifies the textbook convergent bound |h/k - sqrt(p)| < 1/k^2.
inline bool certify_convergent(const QuadField& field, const Convergent& c) {
  return certified_within(field, c.value(), make_rational(1, c.k * c.k));
}

}  // namespace csineq
