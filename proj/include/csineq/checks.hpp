#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csineq/additive.hpp"
#include "csineq/check_common.hpp"
#include "csineq/decomposition.hpp"
#include "csineq/function.hpp"
#include "csineq/report.hpp"

namespace csineq {

namespace detail {

template <GroupoidCarrier C>
using PairSpan = std::span<const std::pair<typename C::Element, typename C::Element>>;

/// Applies one "lhs <= rhs" comparison at a sampled pair and folds the
/// outcome into the report. `diagonal_equal` short-circuits comparisons
/// whose two sides are the same expression once x = y (used on interval
/// carriers, where true equalities are otherwise uncertifiable).
template <GroupoidCarrier C>
void apply_le(const C& carrier, CheckReport& report, CounterexampleRecorder<C>& recorder,
              Verdict& sub, const std::string& inequality, const typename C::Element& x,
              const typename C::Element& y, const typename C::Value& lhs,
              const typename C::Value& rhs, bool diagonal_equal = false) {
  if (diagonal_equal) {
    ++report.equality_points;
    return;
  }
  switch (carrier.v_compare(lhs, rhs)) {
    case Ordering::Less:
      break;
    case Ordering::Equal:
      ++report.equality_points;
      break;
    case Ordering::Greater:
      sub = combine(sub, Verdict::Fails);
      report.verdict = combine(report.verdict, Verdict::Fails);
      recorder.record(x, y, carrier.format_value(lhs), carrier.format_value(rhs), inequality);
      break;
    case Ordering::Unknown:
      sub = combine(sub, Verdict::Inconclusive);
      report.verdict = combine(report.verdict, Verdict::Inconclusive);
      break;
  }
}

template <GroupoidCarrier C>
CheckReport new_report(const C& carrier, std::string name, PairSpan<C> pairs, std::uint64_t seed) {
  CheckReport report;
  report.check_name = std::move(name);
  report.carrier = carrier.id();
  report.seed = seed;
  report.sample_count = static_cast<std::int64_t>(pairs.size());
  report.verdict = Verdict::Holds;
  if constexpr (!C::exact) {
    report.precision_digits = carrier.digits();
  }
  return report;
}

inline void attach_escalation_hint(CheckReport& report) {
  if (report.verdict == Verdict::Inconclusive && !report.note) {
    report.note = "enclosures overlap; raise precision-digits to separate";
  }
}

}  // namespace detail

/// Forward Cauchy-Schwarz-type inequality: A(x*y)^2 <= A(x*x) A(y*y).
template <GroupoidCarrier C>
CheckReport check_cs_forward(const C& carrier, const CarrierFunction<C>& A,
                             detail::PairSpan<C> pairs, std::uint64_t seed) {
  auto report = detail::new_report(carrier, "cs-forward", pairs, seed);
  detail::CounterexampleRecorder<C> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = "A(x*y)^2 <= A(x*x)A(y*y)";
  for (const auto& [x, y] : pairs) {
    const bool diag = !C::exact && carrier.element_eq(x, y);
    const auto lhs = carrier.v_square(A(carrier, carrier.op(x, y)));
    const auto rhs = carrier.v_mul(A(carrier, carrier.op(x, x)), A(carrier, carrier.op(y, y)));
    detail::apply_le(carrier, report, recorder, sub, name, x, y, lhs, rhs, diag);
  }
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

/// Reverse Cauchy-Schwarz-type inequality: A(x*x) A(y*y) <= A(x*y)^2,
/// optionally restricted to pairs from R_A = { x : 0 <= A(x*x) A(e) }.
/// The restriction needs a unit e with A(e) != 0.
template <GroupoidCarrier C>
CheckReport check_cs_reverse(const C& carrier, const CarrierFunction<C>& A,
                             detail::PairSpan<C> pairs, bool restrict_to_R_A,
                             std::uint64_t seed) {
  auto report = detail::new_report(carrier, restrict_to_R_A ? "cs-reverse(R_A)" : "cs-reverse",
                                   pairs, seed);
  detail::CounterexampleRecorder<C> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = "A(x*x)A(y*y) <= A(x*y)^2";

  if (restrict_to_R_A) {
    if constexpr (!C::exact) {
      throw UnsupportedCarrierError("R_A restriction needs an exact carrier");
    } else {
      const auto unit = carrier.unit();
      if (!unit) throw HypothesisViolationError("R_A restriction needs a carrier with a unit");
      const auto a_unit = A(carrier, *unit);
      if (carrier.v_sign(a_unit) == 0) {
        throw HypothesisViolationError("R_A restriction requires A(e) != 0, but A(e) = 0");
      }
      const auto in_ra = [&](const typename C::Element& x) {
        return carrier.v_sign(carrier.v_mul(A(carrier, carrier.op(x, x)), a_unit)) >= 0;
      };
      std::int64_t kept = 0;
      for (const auto& [x, y] : pairs) {
        if (!in_ra(x) || !in_ra(y)) continue;
        ++kept;
        const auto lhs = carrier.v_mul(A(carrier, carrier.op(x, x)), A(carrier, carrier.op(y, y)));
        const auto rhs = carrier.v_square(A(carrier, carrier.op(x, y)));
        detail::apply_le(carrier, report, recorder, sub, name, x, y, lhs, rhs);
      }
      report.sample_count = kept;
      report.note = "pairs filtered through R_A membership";
    }
  } else {
    for (const auto& [x, y] : pairs) {
      const bool diag = !C::exact && carrier.element_eq(x, y);
      const auto lhs = carrier.v_mul(A(carrier, carrier.op(x, x)), A(carrier, carrier.op(y, y)));
      const auto rhs = carrier.v_square(A(carrier, carrier.op(x, y)));
      detail::apply_le(carrier, report, recorder, sub, name, x, y, lhs, rhs, diag);
    }
  }
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

/// The four inequalities implied by the difference/symmetrized system:
///   -B(x*y)^2 <= A(x*x)A(y*y) <= A(x*y)^2
///   -A(x*y)^2 <= B(x*x)B(y*y) <= B(x*y)^2
template <GroupoidCarrier C>
CheckReport check_chain_paired_difference(const C& carrier, const CarrierFunction<C>& A,
                                          const CarrierFunction<C>& B, detail::PairSpan<C> pairs,
                                          std::uint64_t seed) {
  auto report = detail::new_report(carrier, "chain(paired-difference)", pairs, seed);
  detail::CounterexampleRecorder<C> recorder(carrier);
  const std::string n1 = "-B(x*y)^2 <= A(x*x)A(y*y)";
  const std::string n2 = "A(x*x)A(y*y) <= A(x*y)^2";
  const std::string n3 = "-A(x*y)^2 <= B(x*x)B(y*y)";
  const std::string n4 = "B(x*x)B(y*y) <= B(x*y)^2";
  Verdict v1 = Verdict::Holds, v2 = Verdict::Holds, v3 = Verdict::Holds, v4 = Verdict::Holds;
  for (const auto& [x, y] : pairs) {
    const auto xy = carrier.op(x, y);
    const auto xx = carrier.op(x, x);
    const auto yy = carrier.op(y, y);
    const auto axy2 = carrier.v_square(A(carrier, xy));
    const auto bxy2 = carrier.v_square(B(carrier, xy));
    const auto axxayy = carrier.v_mul(A(carrier, xx), A(carrier, yy));
    const auto bxxbyy = carrier.v_mul(B(carrier, xx), B(carrier, yy));
    // On the diagonal the outer comparisons become X <= X; resolve them
    // symbolically where interval separation is impossible.
    const bool diag = !C::exact && carrier.element_eq(x, y);
    detail::apply_le(carrier, report, recorder, v1, n1, x, y, carrier.v_neg(bxy2), axxayy);
    detail::apply_le(carrier, report, recorder, v2, n2, x, y, axxayy, axy2, diag);
    detail::apply_le(carrier, report, recorder, v3, n3, x, y, carrier.v_neg(axy2), bxxbyy);
    detail::apply_le(carrier, report, recorder, v4, n4, x, y, bxxbyy, bxy2, diag);
  }
  report.sub_verdicts = {{n1, v1}, {n2, v2}, {n3, v3}, {n4, v4}};
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

/// The four inequalities implied by the sum/symmetrized system:
///   B(x*x)B(y*y) <= A(x*y)^2 <= A(x*x)A(y*y)
///   B(x*x)B(y*y) <= B(x*y)^2 <= A(x*x)A(y*y)
template <GroupoidCarrier C>
CheckReport check_chain_paired_sum(const C& carrier, const CarrierFunction<C>& A,
                                   const CarrierFunction<C>& B, detail::PairSpan<C> pairs,
                                   std::uint64_t seed) {
  auto report = detail::new_report(carrier, "chain(paired-sum)", pairs, seed);
  detail::CounterexampleRecorder<C> recorder(carrier);
  const std::string n1 = "B(x*x)B(y*y) <= A(x*y)^2";
  const std::string n2 = "A(x*y)^2 <= A(x*x)A(y*y)";
  const std::string n3 = "B(x*x)B(y*y) <= B(x*y)^2";
  const std::string n4 = "B(x*y)^2 <= A(x*x)A(y*y)";
  Verdict v1 = Verdict::Holds, v2 = Verdict::Holds, v3 = Verdict::Holds, v4 = Verdict::Holds;
  for (const auto& [x, y] : pairs) {
    const auto xy = carrier.op(x, y);
    const auto xx = carrier.op(x, x);
    const auto yy = carrier.op(y, y);
    const auto axy2 = carrier.v_square(A(carrier, xy));
    const auto bxy2 = carrier.v_square(B(carrier, xy));
    const auto axxayy = carrier.v_mul(A(carrier, xx), A(carrier, yy));
    const auto bxxbyy = carrier.v_mul(B(carrier, xx), B(carrier, yy));
    const bool diag = !C::exact && carrier.element_eq(x, y);
    detail::apply_le(carrier, report, recorder, v1, n1, x, y, bxxbyy, axy2);
    detail::apply_le(carrier, report, recorder, v2, n2, x, y, axy2, axxayy, diag);
    detail::apply_le(carrier, report, recorder, v3, n3, x, y, bxxbyy, bxy2, diag);
    detail::apply_le(carrier, report, recorder, v4, n4, x, y, bxy2, axxayy);
  }
  report.sub_verdicts = {{n1, v1}, {n2, v2}, {n3, v3}, {n4, v4}};
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

/// Single-variable bound at the unit: A(x*x) A(e) <= A(x)^2 per sampled x
/// (the reverse product inequality specialized to the pair (x, e)). With
/// `restrict_to_R_A` only elements of R_A = { x : 0 <= A(x*x) A(e) } are
/// checked; membership needs exact signs, so the flag requires an exact
/// carrier and A(e) != 0.
template <GroupoidCarrier C>
CheckReport check_square_bound_at_unit(const C& carrier, const CarrierFunction<C>& A,
                                       std::span<const typename C::Element> elements,
                                       bool restrict_to_R_A, std::uint64_t seed) {
  const auto unit = carrier.unit();
  if (!unit) throw HypothesisViolationError("square bound at unit needs a carrier with a unit");
  CheckReport report;
  report.check_name = restrict_to_R_A ? "square-bound-at-unit(R_A)" : "square-bound-at-unit";
  report.carrier = carrier.id();
  report.seed = seed;
  report.verdict = Verdict::Holds;
  if constexpr (!C::exact) {
    report.precision_digits = carrier.digits();
  }
  detail::CounterexampleRecorder<C> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = "A(x*x)A(e) <= A(x)^2";
  const auto a_unit = A(carrier, *unit);

  if (restrict_to_R_A) {
    if constexpr (!C::exact) {
      throw UnsupportedCarrierError("R_A restriction needs an exact carrier");
    } else {
      if (carrier.v_sign(a_unit) == 0) {
        throw HypothesisViolationError("R_A restriction requires A(e) != 0, but A(e) = 0");
      }
    }
  }

  std::int64_t kept = 0;
  for (const auto& x : elements) {
    const auto a_xx = A(carrier, carrier.op(x, x));
    if (restrict_to_R_A) {
      if constexpr (C::exact) {
        if (carrier.v_sign(carrier.v_mul(a_xx, a_unit)) < 0) continue;
      }
    }
    ++kept;
    const auto lhs = carrier.v_mul(a_xx, a_unit);
    const auto rhs = carrier.v_square(A(carrier, x));
    detail::apply_le(carrier, report, recorder, sub, name, x, *unit, lhs, rhs);
  }
  report.sample_count = kept;
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

enum class IdentityKind { DifferenceSystem, SumSystem };

inline std::string to_string(IdentityKind k) {
  return k == IdentityKind::DifferenceSystem ? "difference-system" : "sum-system";
}

/// Exact identities tying the two sides of each system together:
///   difference: B(x*y)^2 + A(x*x)A(y*y) = A(x*y)^2 + B(x*x)B(y*y)
///   sum:        B(x*x)B(y*y) + A(x*x)A(y*y) = A(x*y)^2 + B(x*y)^2
/// Interval carriers cannot certify equalities, so they are rejected.
template <GroupoidCarrier C>
CheckReport check_identity(const C& carrier, const CarrierFunction<C>& A,
                           const CarrierFunction<C>& B, detail::PairSpan<C> pairs,
                           IdentityKind kind, std::uint64_t seed) {
  if (!C::exact) {
    throw UnsupportedCarrierError("identity verification requires an exact carrier");
  }
  auto report = detail::new_report(carrier, "identity(" + to_string(kind) + ")", pairs, seed);
  detail::CounterexampleRecorder<C> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = kind == IdentityKind::DifferenceSystem
                               ? "B(x*y)^2 + A(x*x)A(y*y) == A(x*y)^2 + B(x*x)B(y*y)"
                               : "B(x*x)B(y*y) + A(x*x)A(y*y) == A(x*y)^2 + B(x*y)^2";
  for (const auto& [x, y] : pairs) {
    const auto xy = carrier.op(x, y);
    const auto xx = carrier.op(x, x);
    const auto yy = carrier.op(y, y);
    const auto axy2 = carrier.v_square(A(carrier, xy));
    const auto bxy2 = carrier.v_square(B(carrier, xy));
    const auto axxayy = carrier.v_mul(A(carrier, xx), A(carrier, yy));
    const auto bxxbyy = carrier.v_mul(B(carrier, xx), B(carrier, yy));
    const auto lhs = kind == IdentityKind::DifferenceSystem ? carrier.v_add(bxy2, axxayy)
                                                            : carrier.v_add(bxxbyy, axxayy);
    const auto rhs = kind == IdentityKind::DifferenceSystem ? carrier.v_add(axy2, bxxbyy)
                                                            : carrier.v_add(axy2, bxy2);
    if (carrier.v_compare(lhs, rhs) == Ordering::Equal) {
      ++report.equality_points;
    } else {
      report.verdict = Verdict::Fails;
      sub = Verdict::Fails;
      recorder.record(x, y, carrier.format_value(lhs), carrier.format_value(rhs), name);
    }
  }
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  return report;
}

/// Discriminant inequality for the normalized map A0 = A/A(e) on Q(sqrt(p)):
///   (A0(x)A0(y) - A0(xy))^2 <= (A0(x)^2 - A0(x^2)) (A0(y)^2 - A0(y^2)).
/// Everything is handled through squares; no square root is ever taken.
/// Preconditions (checked up front, closed form): A(e) != 0 and
/// A0(x^2) <= A0(x)^2 for every x.
inline CheckReport check_discriminant_A9(const QuadMulCarrier& carrier, const AdditiveMap& map,
                                         detail::PairSpan<QuadMulCarrier> pairs,
                                         std::uint64_t seed) {
  const QuadField& field = carrier.field();
  if (field.is_zero(map.at_unit())) {
    throw HypothesisViolationError("discriminant check requires A(e) != 0, but A(1) = 0");
  }
  if (!normalized_square_bound_holds(map)) {
    throw HypothesisViolationError(
        "precondition A0(x^2) <= A0(x)^2 fails, e.g. at x = " + field.to_string(field.sqrt_p()));
  }
  auto report = detail::new_report(carrier, "discriminant-A9", pairs, seed);
  detail::CounterexampleRecorder<QuadMulCarrier> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = "(A0(x)A0(y)-A0(xy))^2 <= (A0(x)^2-A0(x^2))(A0(y)^2-A0(y^2))";
  const auto a0 = [&](const QuadElem& x) { return field.div(map(x), map.at_unit()); };
  for (const auto& [x, y] : pairs) {
    const QuadElem a0x = a0(x);
    const QuadElem a0y = a0(y);
    const QuadElem cross = field.sub(field.mul(a0x, a0y), a0(field.mul(x, y)));
    const QuadElem lhs = field.square(cross);
    const QuadElem qx = field.sub(field.square(a0x), a0(field.square(x)));
    const QuadElem qy = field.sub(field.square(a0y), a0(field.square(y)));
    const QuadElem rhs = field.mul(qx, qy);
    detail::apply_le(carrier, report, recorder, sub, name, x, y, lhs, rhs);
  }
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  return report;
}

/// Certifies the strict separation A(x*y)^2 > B(x*y)^2 on the interval
/// carrier through the unit-gap identity A^2 - B^2 = 1 (the hyperbolic
/// cosh/sinh case): the enclosure of the difference must contain 1 and have
/// width < 1, which pins it strictly above zero.
inline CheckReport check_unit_gap_strict(const RealsAddCarrier& carrier,
                                         const CarrierFunction<RealsAddCarrier>& A,
                                         const CarrierFunction<RealsAddCarrier>& B,
                                         detail::PairSpan<RealsAddCarrier> pairs,
                                         std::uint64_t seed) {
  auto report = detail::new_report(carrier, "strict-middle(unit-gap)", pairs, seed);
  detail::CounterexampleRecorder<RealsAddCarrier> recorder(carrier);
  Verdict sub = Verdict::Holds;
  const std::string name = "B(x*y)^2 < A(x*y)^2 via A^2 - B^2 == 1";
  const BigRational one(1);
  for (const auto& [x, y] : pairs) {
    const auto xy = carrier.op(x, y);
    const auto diff = carrier.v_sub(carrier.v_square(A(carrier, xy)),
                                    carrier.v_square(B(carrier, xy)));
    if (!diff.contains(one)) {
      // The enclosure provably misses the claimed identity value.
      sub = combine(sub, Verdict::Fails);
      report.verdict = combine(report.verdict, Verdict::Fails);
      recorder.record(x, y, carrier.format_value(diff), "1/1", name);
    } else if (diff.width() < one && diff.lo.sign() > 0) {
      // contains 1, width < 1: strictly positive, separation certified.
    } else {
      sub = combine(sub, Verdict::Inconclusive);
      report.verdict = combine(report.verdict, Verdict::Inconclusive);
    }
  }
  report.sub_verdicts.emplace_back(name, sub);
  report.counterexamples = recorder.finish();
  detail::attach_escalation_hint(report);
  return report;
}

}  // namespace csineq
