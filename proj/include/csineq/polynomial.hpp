#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "csineq/rational.hpp"

namespace csineq {

/// Polynomial over Q in one variable t, coefficients stored lowest degree
/// first with no trailing zeros (canonical form enforced on construction
/// and after every operation). The zero polynomial has degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(std::initializer_list<BigRational> coeffs_low_first) : c_(coeffs_low_first) { trim(); }

  static PolyQ from_coefficients(std::vector<BigRational> coeffs_low_first) {
    PolyQ f;
    f.c_ = std::move(coeffs_low_first);
    f.trim();
    return f;
  }

  static PolyQ constant(BigRational v) { return PolyQ{std::move(v)}; }
  static PolyQ variable() { return PolyQ{0, 1}; }

  /// c * t^k
  static PolyQ monomial(BigRational c, int k) {
    std::vector<BigRational> v(static_cast<std::size_t>(k) + 1, BigRational(0));
    v.back() = std::move(c);
    return from_coefficients(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const BigRational& coefficient(int k) const {
    static const BigRational kZero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
  }

  const std::vector<BigRational>& coefficients() const { return c_; }

  bool operator==(const PolyQ&) const = default;

  PolyQ operator+(const PolyQ& o) const {
    std::vector<BigRational> out(std::max(c_.size(), o.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return from_coefficients(std::move(out));
  }

  PolyQ operator-() const {
    std::vector<BigRational> out(c_);
    for (auto& v : out) v = -v;
    return from_coefficients(std::move(out));
  }

  PolyQ operator-(const PolyQ& o) const { return *this + (-o); }

  PolyQ operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRational> out(c_.size() + o.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return from_coefficients(std::move(out));
  }

  /// Termwise formal derivative.
  PolyQ derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = BigRational(i) * c_[i];
    return from_coefficients(std::move(out));
  }

  /// Exact Horner evaluation at c.
  BigRational eval(const BigRational& at) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  BigInt height() const {
    BigInt h(0);
    for (const auto& v : c_) {
      BigInt hv = height_of(v);
      if (hv > h) h = hv;
    }
    return h;
  }

  std::string to_string() const {
    if (c_.empty()) return "0/1";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigRational& v = c_[static_cast<std::size_t>(k)];
      if (v.is_zero()) continue;
      if (!out.empty()) out += v.sign() < 0 ? " - " : " + ";
      else if (v.sign() < 0) out += "-";
      const std::string mag = fraction_string(abs_of(v));
      if (k == 0) {
        out += mag;
      } else if (k == 1) {
        out += mag + "*t";
      } else {
        out += mag + "*t^" + std::to_string(k);
      }
    }
    return out.empty() ? "0/1" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

}  // namespace csineq
