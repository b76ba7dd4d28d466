#pragma once

#include <string>

#include "csineq/rational.hpp"

namespace csineq {

/// Element re + im*i of the Gaussian rationals Q(i). Field operations are
/// exact; conjugation is an involutive automorphism.
struct GaussianRational {
  BigRational re;
  BigRational im;

  bool operator==(const GaussianRational&) const = default;

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

inline BigRational norm(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

inline GaussianRational inverse(const GaussianRational& z) {
  if (z.is_zero()) throw DomainError("zero element has no inverse");
  const BigRational n = norm(z);
  return {z.re / n, -z.im / n};
}

inline std::string to_string(const GaussianRational& z) {
  std::string out = fraction_string(z.re);
  if (z.im.sign() < 0) {
    out += " - " + fraction_string(-z.im) + "*i";
  } else {
    out += " + " + fraction_string(z.im) + "*i";
  }
  return out;
}

}  // namespace csineq
