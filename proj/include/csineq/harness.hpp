#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csineq/additive.hpp"
#include "csineq/checks.hpp"
#include "csineq/constructions.hpp"
#include "csineq/sampling.hpp"

namespace csineq {

/// Inequality families a counterexample search can target. Identifiers
/// follow the report names; see parse_predicate for accepted spellings.
enum class Predicate {
  ForwardCS,              // A(x*y)^2 <= A(x*x)A(y*y)
  ReverseCS,              // A(x*x)A(y*y) <= A(x*y)^2
  ReverseCSOnRA,          // same, pairs restricted to R_A
  SquareBoundAtUnit,      // A(x*x)A(e) <= A(x)^2
  ChainPairedDifference,  // the four paired-difference inequalities
  ChainPairedSum,         // the four paired-sum inequalities
  IdentityDifference,
  IdentitySum,
};

inline Predicate parse_predicate(std::string_view id) {
  if (id == "1<" || id == "1*<" || id == "forward") return Predicate::ForwardCS;
  if (id == "2<" || id == "3<" || id == "C4<" || id == "reverse") return Predicate::ReverseCS;
  if (id == "2<RA" || id == "reverse-RA") return Predicate::ReverseCSOnRA;
  if (id == "2xe" || id == "square-bound") return Predicate::SquareBoundAtUnit;
  if (id == "xy" || id == "xy1" || id == "xy2") return Predicate::ChainPairedDifference;
  if (id == "6xy" || id == "6xy1" || id == "6xy2") return Predicate::ChainPairedSum;
  if (id == "identity-difference") return Predicate::IdentityDifference;
  if (id == "identity-sum") return Predicate::IdentitySum;
  throw ConfigError("unknown predicate id: " + std::string(id));
}

/// Budget-bounded counterexample search. Pairs come from the deterministic
/// sample stream (special pairs, inverse pairs, then random pairs), so the
/// stream for a larger budget extends the stream for a smaller one: a FAILS
/// verdict can never flip back to holding when the budget grows. A clean
/// pass is reported as HOLDS-within-budget, never as HOLDS: sampling proves
/// nothing universal.
template <GroupoidCarrier C>
CheckReport search_counterexample(const C& carrier, Predicate predicate,
                                  const CarrierFunction<C>& A, const CarrierFunction<C>* B,
                                  std::int64_t budget, const SampleSpec& spec) {
  if (budget < 1) throw DomainError("search budget must be >= 1");
  const auto needs_b = predicate == Predicate::ChainPairedDifference ||
                       predicate == Predicate::ChainPairedSum ||
                       predicate == Predicate::IdentityDifference ||
                       predicate == Predicate::IdentitySum;
  if (needs_b && B == nullptr) throw ConfigError("this predicate needs a second function");

  CheckReport report;
  switch (predicate) {
    case Predicate::ForwardCS: {
      const auto pairs = sample_pairs(carrier, spec, budget);
      report = check_cs_forward<C>(carrier, A, pairs, spec.seed);
      break;
    }
    case Predicate::ReverseCS:
    case Predicate::ReverseCSOnRA: {
      const auto pairs = sample_pairs(carrier, spec, budget);
      report = check_cs_reverse<C>(carrier, A, pairs, predicate == Predicate::ReverseCSOnRA,
                                   spec.seed);
      break;
    }
    case Predicate::SquareBoundAtUnit: {
      SampleSpec element_spec = spec;
      element_spec.count = static_cast<int>(budget);
      const auto elements = sample_elements(carrier, element_spec);
      report = check_square_bound_at_unit<C>(carrier, A, elements, false, spec.seed);
      break;
    }
    case Predicate::ChainPairedDifference: {
      const auto pairs = sample_pairs(carrier, spec, budget);
      report = check_chain_paired_difference<C>(carrier, A, *B, pairs, spec.seed);
      break;
    }
    case Predicate::ChainPairedSum: {
      const auto pairs = sample_pairs(carrier, spec, budget);
      report = check_chain_paired_sum<C>(carrier, A, *B, pairs, spec.seed);
      break;
    }
    case Predicate::IdentityDifference:
    case Predicate::IdentitySum: {
      const auto pairs = sample_pairs(carrier, spec, budget);
      report = check_identity<C>(carrier, A, *B, pairs,
                                 predicate == Predicate::IdentityDifference
                                     ? IdentityKind::DifferenceSystem
                                     : IdentityKind::SumSystem,
                                 spec.seed);
      break;
    }
  }
  report.check_name = "search(" + report.check_name + ")";
  if (report.verdict == Verdict::Holds) report.verdict = Verdict::HoldsWithinBudget;
  return report;
}

/// Two-sided sampled verification of the semidefiniteness characterization:
/// the classification (left) must agree with the forward inequality battery
/// (right). When the classification is NONE its verified sign witnesses are
/// injected as an extra pair, so the inequality side provably fails too.
inline EquivalenceReport equivalence_check_thm1(const AdditiveMap& map, const SampleSpec& spec) {
  const QuadMulCarrier carrier(map.radicand());
  const Classification cls = classify_additive(map);

  auto pairs = sample_pairs(carrier, spec, spec.count);
  if (cls.tag == ClassTag::None) {
    pairs.emplace_back(*cls.negative_witness, *cls.positive_witness);
  }
  auto forward = check_cs_forward<QuadMulCarrier>(carrier, map.as_function("A"), pairs, spec.seed);
  if (cls.tag == ClassTag::None) {
    forward.note = "classification witnesses injected into the sample";
  }

  EquivalenceReport report;
  report.theorem = "thm1";
  report.left = "classification=" + to_string(cls.tag);
  report.right = to_string(forward.verdict);
  const bool left_semidefinite = cls.tag != ClassTag::None;
  const bool right_holds = forward.verdict == Verdict::Holds;
  report.consistent = left_semidefinite == right_holds;
  report.details.push_back(std::move(forward));
  return report;
}

/// Two-sided sampled verification of the reverse-inequality
/// characterization on R_A: the single-variable bound A(x^2)A(e) <= A(x)^2
/// over sampled x in R_A (left) against the product inequality
/// A(x^2)A(y^2) <= A(xy)^2 over sampled R_A pairs (right). Requires
/// A(e) != 0. The special elements e and sqrt(p) are always sampled; they
/// witness both failure modes whenever the characterization fails.
inline EquivalenceReport equivalence_check_thm2(const AdditiveMap& map, const SampleSpec& spec) {
  const QuadMulCarrier carrier(map.radicand());
  if (carrier.field().is_zero(map.at_unit())) {
    throw HypothesisViolationError("thm2 equivalence requires A(e) != 0, but A(1) = 0");
  }
  const auto a_fn = map.as_function("A");

  const auto elements = sample_elements(carrier, spec);
  auto left = check_square_bound_at_unit<QuadMulCarrier>(carrier, a_fn, elements, true, spec.seed);

  const auto pairs = sample_pairs(carrier, spec, spec.count);
  auto right = check_cs_reverse<QuadMulCarrier>(carrier, a_fn, pairs, true, spec.seed);

  EquivalenceReport report;
  report.theorem = "thm2";
  report.left = to_string(left.verdict);
  report.right = to_string(right.verdict);
  report.consistent = (left.verdict == Verdict::Holds) == (right.verdict == Verdict::Holds);
  report.details.push_back(std::move(left));
  report.details.push_back(std::move(right));
  return report;
}

}  // namespace csineq
