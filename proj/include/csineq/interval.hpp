#pragma once

#include <algorithm>
#include <string>

#include "csineq/rational.hpp"

namespace csineq {

/// Closed interval with exact rational endpoints. Because endpoints are
/// rationals, arithmetic needs no outward rounding: every operation below
/// returns an interval containing the exact image and is
/// inclusion-monotone (tighter inputs give tighter outputs).
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  RationalInterval() : lo(0), hi(0) {}
  RationalInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("interval with lo > hi");
  }

  static RationalInterval point(BigRational v) { return {v, v}; }

  bool operator==(const RationalInterval&) const = default;

  BigRational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
  bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

inline RationalInterval operator+(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

inline RationalInterval operator-(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo - y.hi, x.hi - y.lo};
}

inline RationalInterval operator-(const RationalInterval& x) { return {-x.hi, -x.lo}; }

inline RationalInterval operator*(const RationalInterval& x, const RationalInterval& y) {
  const BigRational p1 = x.lo * y.lo;
  const BigRational p2 = x.lo * y.hi;
  const BigRational p3 = x.hi * y.lo;
  const BigRational p4 = x.hi * y.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

/// Sharp square: [0, max] when the interval straddles zero.
inline RationalInterval square(const RationalInterval& x) {
  const BigRational a = x.lo * x.lo;
  const BigRational b = x.hi * x.hi;
  if (x.lo.sign() <= 0 && x.hi.sign() >= 0) return {BigRational(0), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

inline std::string to_string(const RationalInterval& x) {
  return "[" + fraction_string(x.lo) + ", " + fraction_string(x.hi) + "]";
}

}  // namespace csineq
