#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csineq/enclosure.hpp"
#include "csineq/gaussian.hpp"
#include "csineq/interval.hpp"
#include "csineq/polynomial.hpp"
#include "csineq/quadratic.hpp"
#include "csineq/sampling.hpp"

namespace csineq {

/// Outcome of a value comparison. Exact carriers never return Unknown;
/// interval carriers return Unknown when the enclosures overlap without
/// certifying an order.
enum class Ordering { Less, Equal, Greater, Unknown };

/// Canonical ordering key for elements: height first, then the element's
/// rational components lexicographically. Used to sort counterexamples so
/// the first reported one is reproducible regardless of evaluation order.
struct ElementKey {
  BigInt height;
  std::vector<BigRational> parts;

  friend bool operator<(const ElementKey& a, const ElementKey& b) {
    if (a.height != b.height) return a.height < b.height;
    const std::size_t n = std::min(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.parts[i] != b.parts[i]) return a.parts[i] < b.parts[i];
    }
    return a.parts.size() < b.parts.size();
  }
  friend bool operator==(const ElementKey& a, const ElementKey& b) {
    return a.height == b.height && a.parts == b.parts;
  }
};

/// What every groupoid carrier provides: a total binary operation on
/// elements, exact (or interval) arithmetic on values, comparison, canonical
/// ordering, serialization and seeded sampling.
template <typename C>
concept GroupoidCarrier = requires(const C& c, const typename C::Element& x,
                                   const typename C::Value& v, SplitMix64& rng,
                                   std::int64_t height_bound) {
  requires std::convertible_to<decltype(C::exact), bool>;
  { c.id() } -> std::same_as<std::string>;
  { c.op(x, x) } -> std::same_as<typename C::Element>;
  { c.op_inverse(x) } -> std::same_as<std::optional<typename C::Element>>;
  { c.unit() } -> std::same_as<std::optional<typename C::Element>>;
  { c.element_eq(x, x) } -> std::same_as<bool>;
  { c.element_key(x) } -> std::same_as<ElementKey>;
  { c.format_element(x) } -> std::same_as<std::string>;
  { c.specials() } -> std::same_as<std::vector<typename C::Element>>;
  { c.sample(rng, height_bound) } -> std::same_as<typename C::Element>;
  { c.v_add(v, v) } -> std::same_as<typename C::Value>;
  { c.v_sub(v, v) } -> std::same_as<typename C::Value>;
  { c.v_mul(v, v) } -> std::same_as<typename C::Value>;
  { c.v_neg(v) } -> std::same_as<typename C::Value>;
  { c.v_square(v) } -> std::same_as<typename C::Value>;
  { c.v_compare(v, v) } -> std::same_as<Ordering>;
  { c.format_value(v) } -> std::same_as<std::string>;
};

namespace detail {

inline Ordering ordering_from_sign(int s) {
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace detail

/// (Q(sqrt(p)), *): the multiplicative groupoid of the real quadratic field.
/// Values live in the same field; order decisions go through the exact
/// squared-comparison sign rule.
class QuadMulCarrier {
 public:
  using Element = QuadElem;
  using Value = QuadElem;
  static constexpr bool exact = true;

  explicit QuadMulCarrier(std::int64_t p) : field_(p) {}

  const QuadField& field() const { return field_; }
  std::int64_t radicand() const { return field_.radicand(); }

  std::string id() const { return "quad:" + std::to_string(field_.radicand()); }

  Element op(const Element& x, const Element& y) const { return field_.mul(x, y); }
  std::optional<Element> unit() const { return field_.one(); }
  std::optional<Element> op_inverse(const Element& x) const {
    if (field_.is_zero(x)) return std::nullopt;
    return field_.inverse(x);
  }

  bool element_eq(const Element& x, const Element& y) const { return x == y; }
  ElementKey element_key(const Element& x) const { return {field_.height(x), {x.a, x.b}}; }
  std::string format_element(const Element& x) const { return field_.to_string(x); }

  std::vector<Element> specials() const {
    return {field_.zero(),           field_.one(),
            field_.neg(field_.one()), field_.sqrt_p(),
            field_.neg(field_.sqrt_p()), field_.add(field_.one(), field_.sqrt_p()),
            field_.sub(field_.one(), field_.sqrt_p()), field_.from_rational(2)};
  }

  Element sample(SplitMix64& rng, std::int64_t height_bound) const {
    return field_.make(random_rational(rng, height_bound), random_rational(rng, height_bound));
  }

  Value v_add(const Value& a, const Value& b) const { return field_.add(a, b); }
  Value v_sub(const Value& a, const Value& b) const { return field_.sub(a, b); }
  Value v_mul(const Value& a, const Value& b) const { return field_.mul(a, b); }
  Value v_neg(const Value& a) const { return field_.neg(a); }
  Value v_square(const Value& a) const { return field_.square(a); }
  int v_sign(const Value& a) const { return field_.sign(a); }
  Ordering v_compare(const Value& a, const Value& b) const {
    return detail::ordering_from_sign(field_.compare(a, b));
  }
  std::string format_value(const Value& a) const { return field_.to_string(a); }

 private:
  QuadField field_;
};

/// (Q(i), *): multiplicative groupoid of the Gaussian rationals. The shipped
/// functions on it (real and imaginary parts of a homomorphism) take
/// rational values.
class GaussianMulCarrier {
 public:
  using Element = GaussianRational;
  using Value = BigRational;
  static constexpr bool exact = true;

  std::string id() const { return "gauss"; }

  Element op(const Element& x, const Element& y) const { return x * y; }
  std::optional<Element> unit() const { return Element{1, 0}; }
  std::optional<Element> op_inverse(const Element& x) const {
    if (x.is_zero()) return std::nullopt;
    return inverse(x);
  }

  bool element_eq(const Element& x, const Element& y) const { return x == y; }
  ElementKey element_key(const Element& x) const {
    const BigInt hr = height_of(x.re);
    const BigInt hi = height_of(x.im);
    return {hr > hi ? hr : hi, {x.re, x.im}};
  }
  std::string format_element(const Element& x) const { return to_string(x); }

  std::vector<Element> specials() const {
    return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, 2}, {2, -1}};
  }

  Element sample(SplitMix64& rng, std::int64_t height_bound) const {
    return {random_rational(rng, height_bound), random_rational(rng, height_bound)};
  }

  Value v_add(const Value& a, const Value& b) const { return a + b; }
  Value v_sub(const Value& a, const Value& b) const { return a - b; }
  Value v_mul(const Value& a, const Value& b) const { return a * b; }
  Value v_neg(const Value& a) const { return -a; }
  Value v_square(const Value& a) const { return a * a; }
  int v_sign(const Value& a) const { return a.sign(); }
  Ordering v_compare(const Value& a, const Value& b) const {
    return detail::ordering_from_sign(BigRational(a - b).sign());
  }
  std::string format_value(const Value& a) const { return fraction_string(a); }
};

/// (Q, *): the multiplicative groupoid of the rationals, home of the
/// non-additive counterexample functions.
class RationalMulCarrier {
 public:
  using Element = BigRational;
  using Value = BigRational;
  static constexpr bool exact = true;

  std::string id() const { return "rational"; }

  Element op(const Element& x, const Element& y) const { return x * y; }
  std::optional<Element> unit() const { return BigRational(1); }
  std::optional<Element> op_inverse(const Element& x) const {
    if (x.is_zero()) return std::nullopt;
    return BigRational(1 / x);
  }

  bool element_eq(const Element& x, const Element& y) const { return x == y; }
  ElementKey element_key(const Element& x) const { return {height_of(x), {x}}; }
  std::string format_element(const Element& x) const { return fraction_string(x); }

  std::vector<Element> specials() const {
    return {BigRational(0),        BigRational(1),  BigRational(-1),
            BigRational(2),        make_rational(1, 2), BigRational(-2),
            make_rational(-1, 2),  BigRational(3)};
  }

  Element sample(SplitMix64& rng, std::int64_t height_bound) const {
    return random_rational(rng, height_bound);
  }

  Value v_add(const Value& a, const Value& b) const { return a + b; }
  Value v_sub(const Value& a, const Value& b) const { return a - b; }
  Value v_mul(const Value& a, const Value& b) const { return a * b; }
  Value v_neg(const Value& a) const { return -a; }
  Value v_square(const Value& a) const { return a * a; }
  int v_sign(const Value& a) const { return a.sign(); }
  Ordering v_compare(const Value& a, const Value& b) const {
    return detail::ordering_from_sign(BigRational(a - b).sign());
  }
  std::string format_value(const Value& a) const { return fraction_string(a); }
};

/// (Q[t], *): the multiplicative groupoid of rational polynomials. Functions
/// on it (evaluation, derivative-at-a-point) take rational values.
class PolyMulCarrier {
 public:
  using Element = PolyQ;
  using Value = BigRational;
  static constexpr bool exact = true;

  explicit PolyMulCarrier(int max_sample_degree = 6) : max_degree_(max_sample_degree) {}

  std::string id() const { return "poly"; }

  Element op(const Element& x, const Element& y) const { return x * y; }
  std::optional<Element> unit() const { return PolyQ::constant(1); }
  std::optional<Element> op_inverse(const Element& x) const {
    // Units of Q[t] are the nonzero constants.
    if (x.degree() != 0) return std::nullopt;
    return PolyQ::constant(1 / x.coefficient(0));
  }

  bool element_eq(const Element& x, const Element& y) const { return x == y; }
  ElementKey element_key(const Element& x) const {
    std::vector<BigRational> parts;
    parts.emplace_back(x.degree());
    for (const auto& coeff : x.coefficients()) parts.push_back(coeff);
    return {x.height(), std::move(parts)};
  }
  std::string format_element(const Element& x) const { return x.to_string(); }

  std::vector<Element> specials() const {
    return {PolyQ{},
            PolyQ::constant(1),
            PolyQ::constant(-1),
            PolyQ::variable(),
            PolyQ::monomial(1, 2),
            PolyQ{1, 1}};
  }

  Element sample(SplitMix64& rng, std::int64_t height_bound) const {
    const int deg = static_cast<int>(draw_in(rng, 0, max_degree_));
    std::vector<BigRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(random_rational(rng, height_bound));
    return PolyQ::from_coefficients(std::move(coeffs));
  }

  Value v_add(const Value& a, const Value& b) const { return a + b; }
  Value v_sub(const Value& a, const Value& b) const { return a - b; }
  Value v_mul(const Value& a, const Value& b) const { return a * b; }
  Value v_neg(const Value& a) const { return -a; }
  Value v_square(const Value& a) const { return a * a; }
  int v_sign(const Value& a) const { return a.sign(); }
  Ordering v_compare(const Value& a, const Value& b) const {
    return detail::ordering_from_sign(BigRational(a - b).sign());
  }
  std::string format_value(const Value& a) const { return fraction_string(a); }

 private:
  int max_degree_;
};

/// (R, +) restricted to rational sample points; values are rigorous rational
/// enclosures of analytic functions at those points. Comparisons certify an
/// order only when the enclosures separate, so verdicts here can be
/// Inconclusive; raising `digits` tightens every enclosure (they nest).
class RealsAddCarrier {
 public:
  using Element = BigRational;
  using Value = RationalInterval;
  static constexpr bool exact = false;

  explicit RealsAddCarrier(int digits = 12) : digits_(digits) {
    if (digits < 1) throw DomainError("precision digits must be >= 1");
  }

  int digits() const { return digits_; }
  RealsAddCarrier with_digits(int digits) const { return RealsAddCarrier(digits); }

  std::string id() const { return "reals-interval"; }

  Element op(const Element& x, const Element& y) const { return x + y; }
  std::optional<Element> unit() const { return BigRational(0); }
  std::optional<Element> op_inverse(const Element& x) const { return BigRational(-x); }

  bool element_eq(const Element& x, const Element& y) const { return x == y; }
  ElementKey element_key(const Element& x) const { return {height_of(x), {x}}; }
  std::string format_element(const Element& x) const { return fraction_string(x); }

  std::vector<Element> specials() const {
    return {BigRational(0),       BigRational(1),      BigRational(-1),
            make_rational(1, 2),  make_rational(-1, 2), BigRational(2),
            BigRational(-2)};
  }

  /// Points stay in [-2, 2] so that sums and doublings stay inside the
  /// enclosure domain |x| <= 8.
  Element sample(SplitMix64& rng, std::int64_t height_bound) const {
    const std::int64_t den = draw_in(rng, 1, height_bound);
    const std::int64_t num = draw_in(rng, -2 * den, 2 * den);
    return make_rational(num, den);
  }

  Value v_add(const Value& a, const Value& b) const { return a + b; }
  Value v_sub(const Value& a, const Value& b) const { return a - b; }
  Value v_mul(const Value& a, const Value& b) const { return a * b; }
  Value v_neg(const Value& a) const { return -a; }
  Value v_square(const Value& a) const { return csineq::square(a); }

  Ordering v_compare(const Value& a, const Value& b) const {
    if (a.is_point() && b.is_point()) return detail::ordering_from_sign(BigRational(a.lo - b.lo).sign());
    if (a.hi < b.lo) return Ordering::Less;
    if (b.hi < a.lo) return Ordering::Greater;
    return Ordering::Unknown;
  }
  std::string format_value(const Value& a) const { return to_string(a); }

  /// Enclosure of fn at a sample point, at this carrier's precision.
  Value enclose(AnalyticFn fn, const Element& x) const { return enclose_analytic(fn, x, digits_); }

 private:
  int digits_;
};

static_assert(GroupoidCarrier<QuadMulCarrier>);
static_assert(GroupoidCarrier<GaussianMulCarrier>);
static_assert(GroupoidCarrier<RationalMulCarrier>);
static_assert(GroupoidCarrier<PolyMulCarrier>);
static_assert(GroupoidCarrier<RealsAddCarrier>);

}  // namespace csineq
