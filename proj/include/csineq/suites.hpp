#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csineq/checks.hpp"
#include "csineq/constructions.hpp"
#include "csineq/harness.hpp"

namespace csineq {

inline Verdict aggregate_verdict(const std::vector<CheckReport>& checks) {
  Verdict v = Verdict::Holds;
  for (const auto& c : checks) v = combine(v, c.verdict);
  return v;
}

/// Full battery for the canonical pair on (Q(sqrt(p)), *): paired-sum
/// decomposition, the four sum-chain inequalities, and the sum-system
/// identity, all with exact arithmetic.
inline std::vector<CheckReport> thmB_suite(std::int64_t p, const SampleSpec& spec,
                                           std::int64_t pair_budget) {
  const QuadMulCarrier carrier(p);
  const auto pair = thmB_pair(p);
  const auto pairs = sample_pairs(carrier, spec, pair_budget);
  std::vector<CheckReport> checks;
  checks.push_back(check_decomposition<QuadMulCarrier>(carrier, pair.rep, pair.A_fn, &pair.B_fn,
                                                       pairs, spec.seed));
  checks.push_back(
      check_chain_paired_sum<QuadMulCarrier>(carrier, pair.A_fn, pair.B_fn, pairs, spec.seed));
  checks.push_back(check_identity<QuadMulCarrier>(carrier, pair.A_fn, pair.B_fn, pairs,
                                                  IdentityKind::SumSystem, spec.seed));
  return checks;
}

/// Exact additivity of value-level functions under the element addition of
/// the Gaussian rationals: A(x + y) = A(x) + A(y) per sampled pair.
inline CheckReport check_gaussian_additivity(const GaussianMulCarrier& carrier,
                                             const CarrierFunction<GaussianMulCarrier>& A,
                                             detail::PairSpan<GaussianMulCarrier> pairs,
                                             std::uint64_t seed) {
  CheckReport report;
  report.check_name = "additivity(" + A.name + ")";
  report.carrier = carrier.id();
  report.seed = seed;
  report.sample_count = static_cast<std::int64_t>(pairs.size());
  report.verdict = Verdict::Holds;
  detail::CounterexampleRecorder<GaussianMulCarrier> recorder(carrier);
  for (const auto& [x, y] : pairs) {
    const BigRational lhs = A(carrier, x + y);
    const BigRational rhs = A(carrier, x) + A(carrier, y);
    if (lhs == rhs) {
      ++report.equality_points;
    } else {
      report.verdict = Verdict::Fails;
      recorder.record(x, y, fraction_string(lhs), fraction_string(rhs), "A(x+y) == A(x)+A(y)");
    }
  }
  report.counterexamples = recorder.finish();
  return report;
}

/// Battery for Re/Im of a multiplicative map on (Q(i), *): paired-difference
/// decomposition, the four difference-chain inequalities, the
/// difference-system identity, and (for the automorphism reading) exact
/// additivity of both parts.
inline std::vector<CheckReport> gaussian_suite(bool conjugate, const SampleSpec& spec,
                                               std::int64_t pair_budget, bool verify_additivity) {
  const GaussianMulCarrier carrier;
  const auto pair = gaussian_re_im(conjugate);
  const auto pairs = sample_pairs(carrier, spec, pair_budget);
  std::vector<CheckReport> checks;
  checks.push_back(
      check_decomposition<GaussianMulCarrier>(carrier, pair.rep, pair.A, &pair.B, pairs, spec.seed));
  checks.push_back(
      check_chain_paired_difference<GaussianMulCarrier>(carrier, pair.A, pair.B, pairs, spec.seed));
  checks.push_back(check_identity<GaussianMulCarrier>(carrier, pair.A, pair.B, pairs,
                                                      IdentityKind::DifferenceSystem, spec.seed));
  if (verify_additivity) {
    checks.push_back(check_gaussian_additivity(carrier, pair.A, pairs, spec.seed));
    checks.push_back(check_gaussian_additivity(carrier, pair.B, pairs, spec.seed));
  }
  return checks;
}

/// Battery for the Leibniz-rule witness on (Q[t], *): symmetrized
/// decomposition of A(h) = h'(c) and the reverse inequality it implies.
inline std::vector<CheckReport> derivation_suite(const BigRational& c, const SampleSpec& spec,
                                                 std::int64_t pair_budget) {
  const PolyMulCarrier carrier;
  const auto witness = derivation_witness(c);
  const auto pairs = sample_pairs(carrier, spec, pair_budget);
  std::vector<CheckReport> checks;
  checks.push_back(check_decomposition<PolyMulCarrier>(carrier, witness.rep, witness.A, nullptr,
                                                       pairs, spec.seed));
  checks.push_back(
      check_cs_reverse<PolyMulCarrier>(carrier, witness.A, pairs, false, spec.seed));
  return checks;
}

inline CarrierFunction<RealsAddCarrier> make_analytic_fn(AnalyticFn fn) {
  return {to_string(fn), [fn](const RealsAddCarrier& c, const BigRational& x) {
            return c.enclose(fn, x);
          }};
}

/// cos/sin satisfy the paired-difference system over (R, +).
struct TrigPair {
  CarrierFunction<RealsAddCarrier> A;  // cos
  CarrierFunction<RealsAddCarrier> B;  // sin
  LeviCivitaRep<RealsAddCarrier> rep;
};

inline TrigPair trig_pair() {
  auto a = make_analytic_fn(AnalyticFn::Cos);
  auto b = make_analytic_fn(AnalyticFn::Sin);
  auto rep = make_rep(RepKind::PairedDifference, a, b);
  return {std::move(a), std::move(b), std::move(rep)};
}

/// cosh/sinh satisfy the paired-sum system over (R, +).
struct HyperbolicPair {
  CarrierFunction<RealsAddCarrier> A;  // cosh
  CarrierFunction<RealsAddCarrier> B;  // sinh
  LeviCivitaRep<RealsAddCarrier> rep;
};

inline HyperbolicPair hyperbolic_pair() {
  auto a = make_analytic_fn(AnalyticFn::Cosh);
  auto b = make_analytic_fn(AnalyticFn::Sinh);
  auto rep = make_rep(RepKind::PairedSum, a, b);
  return {std::move(a), std::move(b), std::move(rep)};
}

struct IntervalChainOutcome {
  std::vector<CheckReport> checks;
  int digits_used = 0;
};

/// Runs the trigonometric difference chain at rational points, escalating
/// precision in +6-digit steps until nothing is Inconclusive or the cap is
/// reached. Enclosures nest as digits grow, so escalation can only sharpen
/// verdicts, never flip a certified one.
inline IntervalChainOutcome trig_chain_suite(
    const std::vector<std::pair<BigRational, BigRational>>& pairs, int start_digits,
    int max_digits, std::uint64_t seed) {
  IntervalChainOutcome outcome;
  for (int digits = start_digits;; digits += 6) {
    const RealsAddCarrier carrier(digits);
    const auto pair = trig_pair();
    outcome.checks.clear();
    outcome.checks.push_back(
        check_chain_paired_difference<RealsAddCarrier>(carrier, pair.A, pair.B, pairs, seed));
    outcome.digits_used = digits;
    if (aggregate_verdict(outcome.checks) != Verdict::Inconclusive || digits >= max_digits) break;
  }
  return outcome;
}

/// Hyperbolic sum chain plus the strict middle separation certified through
/// the unit-gap identity, with the same escalation scheme.
inline IntervalChainOutcome hyperbolic_chain_suite(
    const std::vector<std::pair<BigRational, BigRational>>& pairs, int start_digits,
    int max_digits, std::uint64_t seed) {
  IntervalChainOutcome outcome;
  for (int digits = start_digits;; digits += 6) {
    const RealsAddCarrier carrier(digits);
    const auto pair = hyperbolic_pair();
    outcome.checks.clear();
    outcome.checks.push_back(
        check_chain_paired_sum<RealsAddCarrier>(carrier, pair.A, pair.B, pairs, seed));
    outcome.checks.push_back(
        check_unit_gap_strict(carrier, pair.A, pair.B, pairs, seed));
    outcome.digits_used = digits;
    if (aggregate_verdict(outcome.checks) != Verdict::Inconclusive || digits >= max_digits) break;
  }
  return outcome;
}

}  // namespace csineq
