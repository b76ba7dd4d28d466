#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "csineq/carrier.hpp"
#include "csineq/convergents.hpp"
#include "csineq/function.hpp"
#include "csineq/quadratic.hpp"

namespace csineq {

/// Finitely presented additive (equivalently Q-linear) map on Q(sqrt(p)),
/// determined by its values on the basis {1, sqrt(p)}:
///   A(a + b*sqrt(p)) = a*alpha + b*beta,  a, b in Q.
/// Values live in Q(sqrt(p)) as well, so every comparison stays exact.
class AdditiveMap {
 public:
  AdditiveMap(std::int64_t p, QuadElem alpha, QuadElem beta)
      : field_(p), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  const QuadField& field() const { return field_; }
  std::int64_t radicand() const { return field_.radicand(); }
  const QuadElem& alpha() const { return alpha_; }
  const QuadElem& beta() const { return beta_; }

  QuadElem operator()(const QuadElem& x) const {
    return field_.add(field_.scale(x.a, alpha_), field_.scale(x.b, beta_));
  }

  /// A(e) where e = 1 is the multiplicative unit of Q(sqrt(p)).
  QuadElem at_unit() const { return alpha_; }

  bool is_zero_map() const { return field_.is_zero(alpha_) && field_.is_zero(beta_); }

  CarrierFunction<QuadMulCarrier> as_function(std::string name) const {
    AdditiveMap copy = *this;
    return {std::move(name), [copy](const QuadMulCarrier& carrier, const QuadElem& x) {
              if (carrier.radicand() != copy.radicand()) {
                throw CarrierMismatchError(
                    "additive map on quad:" + std::to_string(copy.radicand()) +
                    " applied under carrier " + carrier.id());
              }
              return copy(x);
            }};
  }

  std::string describe() const {
    return "additive(alpha=" + field_.to_string(alpha_) + ", beta=" + field_.to_string(beta_) + ")";
  }

 private:
  QuadField field_;
  QuadElem alpha_;
  QuadElem beta_;
};

inline AdditiveMap make_additive_quad(std::int64_t p, QuadElem alpha, QuadElem beta) {
  return AdditiveMap(p, std::move(alpha), std::move(beta));
}

enum class ClassTag { Zero, Positive, Negative, None };

inline std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::Zero: return "ZERO";
    case ClassTag::Positive: return "POSITIVE";
    case ClassTag::Negative: return "NEGATIVE";
    case ClassTag::None: return "NONE";
  }
  return "?";
}

/// Sign classification of x -> A(x^2). For tag None both witnesses are set:
/// a point where A(x^2) < 0 and one where A(x^2) > 0.
struct Classification {
  ClassTag tag;
  std::optional<QuadElem> negative_witness;
  std::optional<QuadElem> positive_witness;
};

namespace detail {

/// Finds a rational point a (with b = 1) where the quadratic form
/// q(a) = alpha*a^2 + 2*beta*a + p*alpha takes the sign `want`. Used only
/// when the form is indefinite, where such points exist near the vertex
/// -beta/alpha and for large |a|; rational approximants of the vertex come
/// from sqrt(p) convergents.
inline BigRational indefinite_form_point(const QuadField& field, const QuadElem& alpha,
                                         const QuadElem& beta, int want) {
  const auto value_at = [&](const BigRational& a) {
    const QuadElem sq = field.scale(a * a + BigRational(field.radicand()), alpha);
    return field.add(sq, field.scale(2 * a, beta));
  };
  // Large |a| realizes sign(alpha); the vertex realizes -sign(alpha).
  if (field.sign(alpha) == want) {
    BigRational a(1);
    for (int i = 0; i < 512; ++i) {
      if (field.sign(value_at(a)) == want) return a;
      if (field.sign(value_at(-a)) == want) return -a;
      a *= 2;
    }
    throw Error("indefinite form: growth direction search did not terminate");
  }
  const QuadElem vertex = field.neg(field.div(beta, alpha));
  if (vertex.b.is_zero()) return vertex.a;  // vertex itself is rational
  for (int depth = 1; depth <= 64; ++depth) {
    const BigRational approx_root = sqrt_convergents(field.radicand(), depth).back();
    const BigRational a = vertex.a + vertex.b * approx_root;
    if (field.sign(value_at(a)) == want) return a;
  }
  throw Error("indefinite form: vertex approximation did not terminate");
}

}  // namespace detail

/// Exact decision between the three semidefiniteness conditions, using the
/// closed form A(x^2) = (a^2 + p b^2)*alpha + 2ab*beta for x = a + b*sqrt(p):
/// as a quadratic form in (a, b) this is positive semidefinite over Q (hence
/// over R, by density and continuity) iff alpha >= 0 and beta^2 <= p*alpha^2.
/// When neither A nor -A qualifies, rational witnesses of both signs are
/// produced and verified by direct evaluation.
inline Classification classify_additive(const AdditiveMap& map) {
  const QuadField& field = map.field();
  const QuadElem& alpha = map.alpha();
  const QuadElem& beta = map.beta();
  if (map.is_zero_map()) return {ClassTag::Zero, std::nullopt, std::nullopt};

  // discriminant = p*alpha^2 - beta^2 >= 0 means the form is semidefinite.
  const QuadElem discriminant = field.sub(
      field.scale(BigRational(field.radicand()), field.square(alpha)), field.square(beta));
  const int ds = field.sign(discriminant);
  const int as = field.sign(alpha);
  if (ds >= 0 && as >= 0) return {ClassTag::Positive, std::nullopt, std::nullopt};
  if (ds >= 0 && as <= 0) return {ClassTag::Negative, std::nullopt, std::nullopt};

  // Indefinite form: find explicit rational points of both signs.
  QuadElem pos_witness, neg_witness;
  if (as == 0) {
    // A(x^2) = 2ab*beta: flip the sign of b.
    const int bs = field.sign(beta);
    pos_witness = field.make(1, bs > 0 ? 1 : -1);
    neg_witness = field.make(1, bs > 0 ? -1 : 1);
  } else {
    const BigRational a_pos = detail::indefinite_form_point(field, alpha, beta, +1);
    const BigRational a_neg = detail::indefinite_form_point(field, alpha, beta, -1);
    pos_witness = field.make(a_pos, 1);
    neg_witness = field.make(a_neg, 1);
  }
  const auto sign_at = [&](const QuadElem& x) { return field.sign(map(field.square(x))); };
  if (sign_at(pos_witness) <= 0 || sign_at(neg_witness) >= 0) {
    throw Error("classification witness failed verification");
  }
  return {ClassTag::None, neg_witness, pos_witness};
}

/// Membership in R_A = { x : 0 <= A(x^2) A(e) }. Requires A(e) != 0.
inline bool in_R_A(const AdditiveMap& map, const QuadElem& x) {
  const QuadField& field = map.field();
  if (field.is_zero(map.at_unit())) {
    throw HypothesisViolationError("R_A requires A(e) != 0, but A(1) = 0");
  }
  const QuadElem product = field.mul(map(field.square(x)), map.at_unit());
  return field.sign(product) >= 0;
}

/// Closed-form gate for the normalized inequality A0(x^2) <= A0(x)^2
/// (A0 = A/A(e)): writing beta0 = beta/alpha, one computes
/// A0(x)^2 - A0(x^2) = b^2 (beta0^2 - p), so the inequality holds for every
/// x iff beta0^2 >= p, and fails at x = sqrt(p) otherwise.
inline bool normalized_square_bound_holds(const AdditiveMap& map) {
  const QuadField& field = map.field();
  if (field.is_zero(map.at_unit())) {
    throw HypothesisViolationError("normalization requires A(e) != 0, but A(1) = 0");
  }
  const QuadElem beta0 = field.div(map.beta(), map.alpha());
  const QuadElem gap = field.sub(field.square(beta0), field.from_rational(field.radicand()));
  return field.sign(gap) >= 0;
}

}  // namespace csineq
