#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csineq/additive.hpp"
#include "csineq/convergents.hpp"
#include "csineq/decomposition.hpp"
#include "csineq/function.hpp"

namespace csineq {

/// The canonical pair of discontinuous additive maps on Q(sqrt(p)):
///   A(a + b*sqrt(p)) = a   (alpha = 1, beta = 0)
///   B(a + b*sqrt(p)) = b*sqrt(p)   (alpha = 0, beta = sqrt(p))
/// together with their paired-sum decomposition over (Q(sqrt(p)), *):
///   A(xy) = A(x)A(y) + B(x)B(y),  B(xy) = A(x)B(y) + B(x)A(y).
struct CanonicalQuadPair {
  AdditiveMap A;
  AdditiveMap B;
  CarrierFunction<QuadMulCarrier> A_fn;
  CarrierFunction<QuadMulCarrier> B_fn;
  LeviCivitaRep<QuadMulCarrier> rep;
};

inline CanonicalQuadPair thmB_pair(std::int64_t p) {
  const QuadField field(p);
  AdditiveMap a(p, field.one(), field.zero());
  AdditiveMap b(p, field.zero(), field.sqrt_p());
  auto a_fn = a.as_function("rational-part");
  auto b_fn = b.as_function("sqrt-part");
  auto rep = make_rep(RepKind::PairedSum, a_fn, b_fn);
  return {std::move(a), std::move(b), std::move(a_fn), std::move(b_fn), std::move(rep)};
}

/// Real and imaginary part of a multiplicative map phi on the Gaussian
/// rationals (phi = identity or conjugation), with their paired-difference
/// decomposition: A(xy) = A(x)A(y) - B(x)B(y), B(xy) = A(x)B(y) + B(x)A(y).
struct GaussianPair {
  bool conjugated;
  CarrierFunction<GaussianMulCarrier> A;
  CarrierFunction<GaussianMulCarrier> B;
  LeviCivitaRep<GaussianMulCarrier> rep;
};

inline GaussianPair gaussian_re_im(bool conjugate) {
  CarrierFunction<GaussianMulCarrier> a{
      "re", [](const GaussianMulCarrier&, const GaussianRational& z) { return z.re; }};
  CarrierFunction<GaussianMulCarrier> b{
      conjugate ? std::string("im-conj") : std::string("im"),
      [conjugate](const GaussianMulCarrier&, const GaussianRational& z) {
        return conjugate ? BigRational(-z.im) : z.im;
      }};
  auto rep = make_rep(RepKind::PairedDifference, a, b);
  return {conjugate, std::move(a), std::move(b), std::move(rep)};
}

/// Leibniz-rule witness on Q[t]: A(h) = h'(c) satisfies
/// A(hk) = h(c) k'(c) + h'(c) k(c), i.e. the symmetrized decomposition with
/// f(h) = h(c) and g = A.
struct DerivationWitness {
  BigRational point;
  CarrierFunction<PolyMulCarrier> A;        // h -> h'(c)
  CarrierFunction<PolyMulCarrier> eval_fn;  // h -> h(c)
  LeviCivitaRep<PolyMulCarrier> rep;
};

inline DerivationWitness derivation_witness(BigRational c) {
  CarrierFunction<PolyMulCarrier> deriv{
      "derivative-at(" + fraction_string(c) + ")",
      [c](const PolyMulCarrier&, const PolyQ& h) { return h.derivative().eval(c); }};
  CarrierFunction<PolyMulCarrier> eval{
      "eval-at(" + fraction_string(c) + ")",
      [c](const PolyMulCarrier&, const PolyQ& h) { return h.eval(c); }};
  auto rep = make_rep(RepKind::Symmetrized, eval, deriv);
  return {std::move(c), std::move(deriv), std::move(eval), std::move(rep)};
}

/// Rank-1 decomposition of the evaluation homomorphism on Q[t]:
/// E(hk) = E(h) E(k) with E(h) = h(c).
inline LeviCivitaRep<PolyMulCarrier> evaluation_rank1(const BigRational& c) {
  CarrierFunction<PolyMulCarrier> eval{
      "eval-at(" + fraction_string(c) + ")",
      [c](const PolyMulCarrier&, const PolyQ& h) { return h.eval(c); }};
  return make_rank_n<PolyMulCarrier>({std::move(eval)});
}

enum class CounterexampleKind { UnitPerturbedIdentity, DistanceFromUnit };

/// f(x) = x except f(1) = q, with q in (0, 1). Not additive; satisfies the
/// single-variable bound f(x^2) f(1) <= f(x)^2 everywhere yet violates the
/// reverse product inequality on the locus xy = 1.
inline CarrierFunction<RationalMulCarrier> make_unit_perturbed_identity(const BigRational& q) {
  if (!(q.sign() > 0 && q < 1)) {
    throw DomainError("perturbation parameter must satisfy 0 < q < 1, got " + fraction_string(q));
  }
  return {"unit-perturbed-identity(q=" + fraction_string(q) + ")",
          [q](const RationalMulCarrier&, const BigRational& x) {
            return x == 1 ? q : x;
          }};
}

/// A(x) = |x - 1|: continuous, not additive, A(1) = 0; also fails the
/// reverse product inequality at (2, 1/2).
inline CarrierFunction<RationalMulCarrier> make_distance_from_unit() {
  return {"distance-from-unit",
          [](const RationalMulCarrier&, const BigRational& x) { return abs_of(x - 1); }};
}

inline CarrierFunction<RationalMulCarrier> counterexample_function(CounterexampleKind kind,
                                                                   const BigRational& q = 0) {
  return kind == CounterexampleKind::UnitPerturbedIdentity ? make_unit_perturbed_identity(q)
                                                           : make_distance_from_unit();
}

/// Quantitative discontinuity certificate at u = 1 + sqrt(p): rational
/// approximants y_j = 1 + r_j built from sqrt(p) convergents get within
/// `distance_bound` of u (certified exactly) while the map value stays a
/// fixed gap away from the value at u.
struct DiscontinuityWitness {
  std::string map_name;            // "A" or "B" of the canonical pair
  QuadElem point_u;                // 1 + sqrt(p)
  std::vector<BigRational> approximants;  // y_0 .. y_depth
  BigRational distance_bound;      // 1/k_depth^2, certified for the last approximant
  QuadElem value_gap;              // |map(y_last) - map(u)|
};

/// `depth` counts continued-fraction refinement steps past the integer part:
/// depth d uses convergents r_0..r_d and certifies the last one. Supports
/// the canonical pair members (rational-part and sqrt-part maps); other
/// additive maps have no a-priori value gap and are rejected.
inline DiscontinuityWitness discontinuity_witness(const AdditiveMap& map, int depth) {
  if (depth < 0) throw DomainError("witness depth must be >= 0");
  const QuadField& field = map.field();
  const bool is_rational_part = map.alpha() == field.one() && map.beta() == field.zero();
  const bool is_sqrt_part = map.alpha() == field.zero() && map.beta() == field.sqrt_p();
  if (!is_rational_part && !is_sqrt_part) {
    throw DomainError("discontinuity witness supports the canonical pair only, got " +
                      map.describe());
  }

  const auto convergents = sqrt_convergent_seq(field.radicand(), depth + 1);
  const Convergent& last = convergents.back();
  const BigRational bound = make_rational(1, last.k * last.k);
  if (!certified_within(field, last.value(), bound)) {
    throw Error("convergent bound certification failed");  // cannot happen for true convergents
  }

  DiscontinuityWitness w;
  w.map_name = is_rational_part ? "A" : "B";
  w.point_u = field.add(field.one(), field.sqrt_p());
  for (const auto& c : convergents) w.approximants.push_back(1 + c.value());
  w.distance_bound = bound;
  // Rational-part map: |A(1 + r) - A(1 + sqrt(p))| = |(1 + r) - 1| = r.
  // Sqrt-part map: |B(1 + r) - B(1 + sqrt(p))| = |0 - sqrt(p)| = sqrt(p).
  const QuadElem y_last = field.from_rational(w.approximants.back());
  w.value_gap = field.abs(field.sub(map(y_last), map(w.point_u)));
  return w;
}

}  // namespace csineq
