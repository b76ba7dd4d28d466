#include <catch2/catch_amalgamated.hpp>

#include "csineq/checks.hpp"
#include "csineq/constructions.hpp"
#include "csineq/sampling.hpp"
#include "csineq/suites.hpp"

using namespace csineq;

namespace {

CarrierFunction<RationalMulCarrier> zero_fn() {
  return {"zero", [](const RationalMulCarrier&, const BigRational&) { return BigRational(0); }};
}

const GaussianRational kX{1, 2};   // 1 + 2i
const GaussianRational kY{2, -1};  // 2 - i

}  // namespace

TEST_CASE("forward inequality holds trivially for the zero function") {
  const RationalMulCarrier carrier;
  SampleSpec spec{1, 50, 20, true};
  const auto pairs = sample_pairs(carrier, spec, 50);
  const auto report = check_cs_forward<RationalMulCarrier>(carrier, zero_fn(), pairs, spec.seed);
  CHECK(report.verdict == Verdict::Holds);
  CHECK(report.equality_points == 50);
}

TEST_CASE("forward inequality at a canonical quad pair") {
  const QuadMulCarrier carrier(2);
  const QuadField& f = carrier.field();
  const auto pair = thmB_pair(2);
  // x = 1 + sqrt2, y = 3 - sqrt2: A(xy)^2 = 1 <= A(x^2) A(y^2) = 3 * 11.
  CHECK(pair.A(f.square(f.make(1, 1))) == f.make(3, 0));
  CHECK(pair.A(f.square(f.make(3, -1))) == f.make(11, 0));
  const std::vector<std::pair<QuadElem, QuadElem>> pairs = {{f.make(1, 1), f.make(3, -1)}};
  const auto report = check_cs_forward<QuadMulCarrier>(carrier, pair.A_fn, pairs, 0);
  CHECK(report.verdict == Verdict::Holds);
}

TEST_CASE("forward inequality fails for the Gaussian real part") {
  const GaussianMulCarrier carrier;
  const auto pair = gaussian_re_im(false);
  const std::vector<std::pair<GaussianRational, GaussianRational>> pairs = {{kX, kY}};
  const auto report = check_cs_forward<GaussianMulCarrier>(carrier, pair.A, pairs, 0);
  REQUIRE(report.verdict == Verdict::Fails);
  REQUIRE(report.counterexamples.size() == 1);
  CHECK(report.counterexamples[0].lhs == "16/1");
  CHECK(report.counterexamples[0].rhs == "-9/1");
}

TEST_CASE("reverse inequality holds at the Gaussian pair") {
  const GaussianMulCarrier carrier;
  const auto pair = gaussian_re_im(false);
  const std::vector<std::pair<GaussianRational, GaussianRational>> pairs = {{kX, kY}};
  const auto report = check_cs_reverse<GaussianMulCarrier>(carrier, pair.A, pairs, false, 0);
  CHECK(report.verdict == Verdict::Holds);
}

TEST_CASE("reverse inequality fails for the perturbed identity on xy = 1") {
  const RationalMulCarrier carrier;
  const auto f = make_unit_perturbed_identity(make_rational(1, 2));
  const std::vector<std::pair<BigRational, BigRational>> pairs = {{2, make_rational(1, 2)}};
  const auto report = check_cs_reverse<RationalMulCarrier>(carrier, f, pairs, false, 0);
  REQUIRE(report.verdict == Verdict::Fails);
  REQUIRE(report.counterexamples.size() == 1);
  CHECK(report.counterexamples[0].lhs == "1/1");   // f(4) f(1/4) = 1
  CHECK(report.counterexamples[0].rhs == "1/4");   // f(1)^2 = 1/4
}

TEST_CASE("reverse inequality holds for the derivation witness at a sample pair") {
  const PolyMulCarrier carrier;
  const auto witness = derivation_witness(2);
  // x = t, y = t^2: A(x^2) A(y^2) = 4 * 32 = 128 <= A(xy)^2 = 144.
  CHECK(witness.A(carrier, PolyQ::monomial(1, 2)) == BigRational(4));
  CHECK(witness.A(carrier, PolyQ::monomial(1, 4)) == BigRational(32));
  CHECK(witness.A(carrier, PolyQ::monomial(1, 3)) == BigRational(12));
  const std::vector<std::pair<PolyQ, PolyQ>> pairs = {{PolyQ::variable(), PolyQ::monomial(1, 2)}};
  const auto report = check_cs_reverse<PolyMulCarrier>(carrier, witness.A, pairs, false, 0);
  CHECK(report.verdict == Verdict::Holds);
}

TEST_CASE("paired-difference chain reproduces the hand computation") {
  const GaussianMulCarrier carrier;
  const auto pair = gaussian_re_im(false);
  const std::vector<std::pair<GaussianRational, GaussianRational>> pairs = {{kX, kY}};
  const auto report =
      check_chain_paired_difference<GaussianMulCarrier>(carrier, pair.A, pair.B, pairs, 0);
  CHECK(report.verdict == Verdict::Holds);
  // -9 <= -9 <= 16 and -16 <= -16 <= 9: equality on both left ends.
  CHECK(report.equality_points == 2);
  for (const auto& [name, verdict] : report.sub_verdicts) {
    CHECK(verdict == Verdict::Holds);
  }
}

TEST_CASE("paired-sum chain at the canonical quad pair") {
  const QuadMulCarrier carrier(2);
  const QuadField& f = carrier.field();
  const auto pair = thmB_pair(2);
  const QuadElem x = f.make(1, 1), y = f.make(3, -1);
  // B(x^2) B(y^2) = -24, A(xy)^2 = 1, B(xy)^2 = 8, A(x^2) A(y^2) = 33.
  CHECK(f.mul(pair.B(f.square(x)), pair.B(f.square(y))) == f.make(-24, 0));
  CHECK(f.square(pair.A(f.mul(x, y))) == f.make(1, 0));
  CHECK(f.square(pair.B(f.mul(x, y))) == f.make(8, 0));
  const std::vector<std::pair<QuadElem, QuadElem>> pairs = {{x, y}};
  const auto report = check_chain_paired_sum<QuadMulCarrier>(carrier, pair.A_fn, pair.B_fn, pairs, 0);
  CHECK(report.verdict == Verdict::Holds);
  CHECK(report.counterexamples.empty());
}

TEST_CASE("interval chains certify at rational points") {
  const RealsAddCarrier carrier(12);
  const auto trig = trig_pair();

  // x = y = 0: everything exact; the two diagonal comparisons count as equalities.
  std::vector<std::pair<BigRational, BigRational>> zero = {{0, 0}};
  const auto at_zero =
      check_chain_paired_difference<RealsAddCarrier>(carrier, trig.A, trig.B, zero, 0);
  CHECK(at_zero.verdict == Verdict::Holds);
  CHECK(at_zero.equality_points == 2);

  std::vector<std::pair<BigRational, BigRational>> pts = {{make_rational(1, 2), make_rational(1, 3)}};
  const auto trig_report =
      check_chain_paired_difference<RealsAddCarrier>(carrier, trig.A, trig.B, pts, 0);
  CHECK(trig_report.verdict == Verdict::Holds);
  CHECK(trig_report.precision_digits == 12);

  const auto hyp = hyperbolic_pair();
  std::vector<std::pair<BigRational, BigRational>> hpts = {{make_rational(1, 2), make_rational(1, 4)}};
  const auto hyp_report =
      check_chain_paired_sum<RealsAddCarrier>(carrier, hyp.A, hyp.B, hpts, 0);
  CHECK(hyp_report.verdict == Verdict::Holds);

  const auto gap = check_unit_gap_strict(carrier, hyp.A, hyp.B, hpts, 0);
  CHECK(gap.verdict == Verdict::Holds);

  // cos^2 - sin^2 is not identically 1: the unit-gap route must refute it.
  const auto wrong_gap = check_unit_gap_strict(carrier, trig.A, trig.B, hpts, 0);
  CHECK(wrong_gap.verdict == Verdict::Fails);
}

TEST_CASE("identities hold exactly for both systems") {
  const GaussianMulCarrier gauss;
  const auto gpair = gaussian_re_im(false);
  const std::vector<std::pair<GaussianRational, GaussianRational>> gpairs = {{kX, kY}};
  const auto diff_identity = check_identity<GaussianMulCarrier>(
      gauss, gpair.A, gpair.B, gpairs, IdentityKind::DifferenceSystem, 0);
  CHECK(diff_identity.verdict == Verdict::Holds);
  CHECK(diff_identity.equality_points == 1);

  const QuadMulCarrier quad(2);
  const QuadField& f = quad.field();
  const auto qpair = thmB_pair(2);
  const std::vector<std::pair<QuadElem, QuadElem>> qpairs = {{f.make(1, 1), f.make(3, -1)}};
  const auto sum_identity = check_identity<QuadMulCarrier>(quad, qpair.A_fn, qpair.B_fn, qpairs,
                                                           IdentityKind::SumSystem, 0);
  CHECK(sum_identity.verdict == Verdict::Holds);

  const RationalMulCarrier rational;
  SampleSpec spec{7, 40, 15, true};
  const auto rpairs = sample_pairs(rational, spec, 40);
  for (const auto kind : {IdentityKind::DifferenceSystem, IdentityKind::SumSystem}) {
    const auto zeros = check_identity<RationalMulCarrier>(rational, zero_fn(), zero_fn(), rpairs,
                                                          kind, spec.seed);
    CHECK(zeros.verdict == Verdict::Holds);
  }
}

TEST_CASE("identity checking rejects interval carriers") {
  const RealsAddCarrier carrier(10);
  const auto trig = trig_pair();
  const std::vector<std::pair<BigRational, BigRational>> pts = {{0, 1}};
  CHECK_THROWS_AS(check_identity<RealsAddCarrier>(carrier, trig.A, trig.B, pts,
                                                  IdentityKind::DifferenceSystem, 0),
                  UnsupportedCarrierError);
}

TEST_CASE("discriminant inequality holds with equality on the additive family") {
  const QuadMulCarrier carrier(2);
  const QuadField& f = carrier.field();
  const AdditiveMap map(2, f.one(), f.make(0, 2));  // alpha = 1, beta = 2 sqrt2
  SampleSpec spec{11, 200, 30, true};
  const auto pairs = sample_pairs(carrier, spec, 200);
  const auto report = check_discriminant_A9(carrier, map, pairs, spec.seed);
  CHECK(report.verdict == Verdict::Holds);
  CHECK(report.equality_points == report.sample_count);

  // Independent brute expansion: both sides equal b1^2 b2^2 (beta0^2 - p)^2.
  const QuadElem beta0 = f.div(map.beta(), map.alpha());
  const QuadElem factor = f.square(f.sub(f.square(beta0), f.from_rational(2)));
  const auto a0 = [&](const QuadElem& v) { return f.div(map(v), map.at_unit()); };
  for (const auto& [x, y] : pairs) {
    const QuadElem lhs = f.square(f.sub(f.mul(a0(x), a0(y)), a0(f.mul(x, y))));
    const QuadElem expected = f.scale(x.b * x.b * y.b * y.b, factor);
    CHECK(lhs == expected);
    const QuadElem rhs = f.mul(f.sub(f.square(a0(x)), a0(f.square(x))),
                               f.sub(f.square(a0(y)), a0(f.square(y))));
    CHECK(rhs == expected);
  }
}

TEST_CASE("discriminant inequality on a rational-beta map") {
  const QuadMulCarrier carrier(2);
  const QuadField& f = carrier.field();
  const AdditiveMap map(2, f.one(), f.make(3, 0));  // beta0^2 = 9 >= 2
  const std::vector<std::pair<QuadElem, QuadElem>> pairs = {{f.make(1, 1), f.make(1, -1)}};
  const auto report = check_discriminant_A9(carrier, map, pairs, 0);
  CHECK(report.verdict == Verdict::Holds);
  CHECK(report.equality_points == 1);
  // Both sides are (beta0^2 - p)^2 = 49 here (b1 = 1, b2 = -1).
  const auto a0 = [&](const QuadElem& v) { return f.div(map(v), map.at_unit()); };
  const QuadElem lhs =
      f.square(f.sub(f.mul(a0(f.make(1, 1)), a0(f.make(1, -1))), a0(f.make(-1, 0))));
  CHECK(lhs == f.make(49, 0));
}

TEST_CASE("discriminant preconditions are enforced") {
  const QuadMulCarrier carrier(2);
  const QuadField& f = carrier.field();
  const std::vector<std::pair<QuadElem, QuadElem>> pairs = {{f.one(), f.one()}};
  // beta0 = 0: A0(x)^2 - A0(x^2) = -2 < 0 at x = sqrt2.
  CHECK_THROWS_AS(check_discriminant_A9(carrier, AdditiveMap(2, f.one(), f.zero()), pairs, 0),
                  HypothesisViolationError);
  CHECK_THROWS_AS(check_discriminant_A9(carrier, AdditiveMap(2, f.zero(), f.sqrt_p()), pairs, 0),
                  HypothesisViolationError);
  CHECK_THROWS_MATCHES(
      check_discriminant_A9(carrier, AdditiveMap(2, f.one(), f.zero()), pairs, 0),
      HypothesisViolationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("sqrt(2)")));
}

TEST_CASE("square bound at the unit for the perturbed identity") {
  const RationalMulCarrier carrier;
  const auto f = make_unit_perturbed_identity(make_rational(1, 2));
  SampleSpec spec{13, 500, 60, true};
  const auto elements = sample_elements(carrier, spec);
  const auto report =
      check_square_bound_at_unit<RationalMulCarrier>(carrier, f, elements, false, spec.seed);
  CHECK(report.verdict == Verdict::Holds);
  CHECK(report.equality_points >= 2);  // equality at x = 1 and x = 0
  CHECK(report.sample_count == 500);
}

TEST_CASE("verdicts are invariant under swapping x and y") {
  const GaussianMulCarrier carrier;
  const auto pair = gaussian_re_im(false);
  SampleSpec spec{17, 120, 40, true};
  auto pairs = sample_pairs(carrier, spec, 120);
  const auto direct =
      check_chain_paired_difference<GaussianMulCarrier>(carrier, pair.A, pair.B, pairs, spec.seed);
  for (auto& [x, y] : pairs) std::swap(x, y);
  const auto swapped =
      check_chain_paired_difference<GaussianMulCarrier>(carrier, pair.A, pair.B, pairs, spec.seed);
  CHECK(direct.verdict == swapped.verdict);
  CHECK(direct.equality_points == swapped.equality_points);
}

TEST_CASE("raising precision never flips a holding interval verdict") {
  SampleSpec spec{19, 40, 25, true};
  const RealsAddCarrier low(8);
  const auto pairs = sample_pairs(low, spec, 40);
  const auto trig8 = trig_chain_suite(pairs, 8, 8, spec.seed);
  const auto trig14 = trig_chain_suite(pairs, 14, 14, spec.seed);
  if (aggregate_verdict(trig8.checks) == Verdict::Holds) {
    CHECK(aggregate_verdict(trig14.checks) == Verdict::Holds);
  }
  const auto hyp8 = hyperbolic_chain_suite(pairs, 8, 8, spec.seed);
  const auto hyp14 = hyperbolic_chain_suite(pairs, 14, 14, spec.seed);
  if (aggregate_verdict(hyp8.checks) == Verdict::Holds) {
    CHECK(aggregate_verdict(hyp14.checks) == Verdict::Holds);
  }
}

TEST_CASE("validated decompositions imply their inequalities on the same samples") {
  // rank-n on (Q, *): A(z) = z + z^2 with multiplicative components.
  const RationalMulCarrier rational;
  CarrierFunction<RationalMulCarrier> ident{"z",
      [](const RationalMulCarrier&, const BigRational& x) { return x; }};
  CarrierFunction<RationalMulCarrier> sq{"z^2",
      [](const RationalMulCarrier&, const BigRational& x) { return BigRational(x * x); }};
  CarrierFunction<RationalMulCarrier> target{"z+z^2",
      [](const RationalMulCarrier&, const BigRational& x) { return BigRational(x + x * x); }};
  const auto rep = make_rank_n<RationalMulCarrier>({ident, sq});
  SampleSpec spec{23, 150, 30, true};
  const auto pairs = sample_pairs(rational, spec, 150);
  const auto dec = check_decomposition<RationalMulCarrier>(rational, rep, target, nullptr, pairs,
                                                           spec.seed);
  REQUIRE(dec.verdict == Verdict::Holds);
  const auto fwd = check_cs_forward<RationalMulCarrier>(rational, target, pairs, spec.seed);
  CHECK(fwd.verdict == Verdict::Holds);

  // difference on (Q(i), *) implies the reverse inequality.
  const GaussianMulCarrier gauss;
  const auto gpair = gaussian_re_im(false);
  const auto grep = make_rep(RepKind::Difference, gpair.A, gpair.B);
  const auto gpairs = sample_pairs(gauss, spec, 150);
  const auto gdec =
      check_decomposition<GaussianMulCarrier>(gauss, grep, gpair.A, nullptr, gpairs, spec.seed);
  REQUIRE(gdec.verdict == Verdict::Holds);
  const auto rev = check_cs_reverse<GaussianMulCarrier>(gauss, gpair.A, gpairs, false, spec.seed);
  CHECK(rev.verdict == Verdict::Holds);

  // symmetrized on Q[t] implies the reverse inequality.
  const PolyMulCarrier poly;
  const auto witness = derivation_witness(make_rational(-3, 2));
  const auto ppairs = sample_pairs(poly, spec, 150);
  const auto pdec = check_decomposition<PolyMulCarrier>(poly, witness.rep, witness.A, nullptr,
                                                        ppairs, spec.seed);
  REQUIRE(pdec.verdict == Verdict::Holds);
  const auto prev = check_cs_reverse<PolyMulCarrier>(poly, witness.A, ppairs, false, spec.seed);
  CHECK(prev.verdict == Verdict::Holds);

  // paired systems imply their chains and identities.
  const QuadMulCarrier quad(7);
  const auto qpair = thmB_pair(7);
  const auto qpairs = sample_pairs(quad, spec, 150);
  REQUIRE(check_decomposition<QuadMulCarrier>(quad, qpair.rep, qpair.A_fn, &qpair.B_fn, qpairs,
                                              spec.seed)
              .verdict == Verdict::Holds);
  CHECK(check_chain_paired_sum<QuadMulCarrier>(quad, qpair.A_fn, qpair.B_fn, qpairs, spec.seed)
            .verdict == Verdict::Holds);
  CHECK(check_identity<QuadMulCarrier>(quad, qpair.A_fn, qpair.B_fn, qpairs,
                                       IdentityKind::SumSystem, spec.seed)
            .verdict == Verdict::Holds);
  CHECK(check_chain_paired_difference<GaussianMulCarrier>(gauss, gpair.A, gpair.B, gpairs,
                                                          spec.seed)
            .verdict == Verdict::Holds);
  CHECK(check_identity<GaussianMulCarrier>(gauss, gpair.A, gpair.B, gpairs,
                                           IdentityKind::DifferenceSystem, spec.seed)
            .verdict == Verdict::Holds);
}

TEST_CASE("R_A restriction requires its hypotheses") {
  const RationalMulCarrier carrier;
  const auto co = make_distance_from_unit();  // A(1) = 0
  SampleSpec spec{29, 30, 10, true};
  const auto pairs = sample_pairs(carrier, spec, 30);
  CHECK_THROWS_AS(check_cs_reverse<RationalMulCarrier>(carrier, co, pairs, true, spec.seed),
                  HypothesisViolationError);
  const auto elements = sample_elements(carrier, spec);
  CHECK_THROWS_AS(
      check_square_bound_at_unit<RationalMulCarrier>(carrier, co, elements, true, spec.seed),
      HypothesisViolationError);
}
