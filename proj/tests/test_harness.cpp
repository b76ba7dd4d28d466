#include <catch2/catch_amalgamated.hpp>

#include "csineq/harness.hpp"
#include "csineq/suites.hpp"

using namespace csineq;

TEST_CASE("predicate parsing") {
  CHECK(parse_predicate("1<") == Predicate::ForwardCS);
  CHECK(parse_predicate("1*<") == Predicate::ForwardCS);
  CHECK(parse_predicate("2<") == Predicate::ReverseCS);
  CHECK(parse_predicate("3<") == Predicate::ReverseCS);
  CHECK(parse_predicate("C4<") == Predicate::ReverseCS);
  CHECK(parse_predicate("2<RA") == Predicate::ReverseCSOnRA);
  CHECK(parse_predicate("2xe") == Predicate::SquareBoundAtUnit);
  CHECK(parse_predicate("xy1") == Predicate::ChainPairedDifference);
  CHECK(parse_predicate("6xy2") == Predicate::ChainPairedSum);
  CHECK_THROWS_AS(parse_predicate("nope"), ConfigError);
}

TEST_CASE("search finds the perturbed-identity violation on xy = 1") {
  const RationalMulCarrier carrier;
  const auto f = make_unit_perturbed_identity(make_rational(1, 2));
  SampleSpec spec{0, 200, 50, true};
  const auto report =
      search_counterexample<RationalMulCarrier>(carrier, Predicate::ReverseCS, f, nullptr, 200, spec);
  REQUIRE(report.verdict == Verdict::Fails);
  bool found = false;
  for (const auto& ce : report.counterexamples) {
    const BigRational x = parse_rational(ce.x);
    const BigRational y = parse_rational(ce.y);
    if (x * y == 1 && x != 1 && x != -1 && ce.lhs == "1/1" && ce.rhs == "1/4") found = true;
  }
  CHECK(found);
}

TEST_CASE("search finds the distance-from-unit violation at (2, 1/2)") {
  const RationalMulCarrier carrier;
  const auto f = make_distance_from_unit();
  SampleSpec spec{0, 200, 50, true};
  const auto report =
      search_counterexample<RationalMulCarrier>(carrier, Predicate::ReverseCS, f, nullptr, 400, spec);
  REQUIRE(report.verdict == Verdict::Fails);
  bool found = false;
  for (const auto& ce : report.counterexamples) {
    if (ce.x == "2/1" && ce.y == "1/2") {
      CHECK(ce.lhs == "9/4");
      CHECK(ce.rhs == "0/1");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("the canonical pair survives a chain search") {
  const QuadMulCarrier carrier(2);
  const auto pair = thmB_pair(2);
  SampleSpec spec{0, 500, 80, true};
  const auto report = search_counterexample<QuadMulCarrier>(
      carrier, Predicate::ChainPairedSum, pair.A_fn, &pair.B_fn, 1000, spec);
  CHECK(report.verdict == Verdict::HoldsWithinBudget);
  CHECK(report.counterexamples.empty());
}

TEST_CASE("search verdict is monotone in the budget") {
  const RationalMulCarrier carrier;
  const auto f = make_unit_perturbed_identity(make_rational(1, 2));
  SampleSpec spec{21, 300, 40, true};
  const auto small =
      search_counterexample<RationalMulCarrier>(carrier, Predicate::ReverseCS, f, nullptr, 100, spec);
  const auto large =
      search_counterexample<RationalMulCarrier>(carrier, Predicate::ReverseCS, f, nullptr, 900, spec);
  REQUIRE(small.verdict == Verdict::Fails);
  CHECK(large.verdict == Verdict::Fails);
}

TEST_CASE("square-bound search passes for the perturbed identity") {
  const RationalMulCarrier carrier;
  const auto f = make_unit_perturbed_identity(make_rational(1, 2));
  SampleSpec spec{0, 100, 30, true};
  const auto report = search_counterexample<RationalMulCarrier>(
      carrier, Predicate::SquareBoundAtUnit, f, nullptr, 1000, spec);
  CHECK(report.verdict == Verdict::HoldsWithinBudget);
  CHECK(report.sample_count == 1000);
}

TEST_CASE("thm1 equivalence on the named maps") {
  const QuadField f(2);
  SampleSpec spec{42, 300, 60, true};

  const auto pos = equivalence_check_thm1(AdditiveMap(2, f.one(), f.zero()), spec);
  CHECK(pos.left == "classification=POSITIVE");
  CHECK(pos.right == "HOLDS");
  CHECK(pos.consistent);

  const auto zero = equivalence_check_thm1(AdditiveMap(2, f.zero(), f.zero()), spec);
  CHECK(zero.left == "classification=ZERO");
  CHECK(zero.consistent);

  const auto none = equivalence_check_thm1(AdditiveMap(2, f.zero(), f.one()), spec);
  CHECK(none.left == "classification=NONE");
  CHECK(none.right == "FAILS");
  CHECK(none.consistent);
  REQUIRE(none.details.size() == 1);
  CHECK_FALSE(none.details[0].counterexamples.empty());
}

TEST_CASE("thm2 equivalence on the named maps") {
  const QuadField f(2);
  SampleSpec spec{42, 300, 60, true};

  // beta0 = 2 sqrt2: beta0^2 = 8 >= 2, so both sides hold.
  const auto good = equivalence_check_thm2(AdditiveMap(2, f.one(), f.make(0, 2)), spec);
  CHECK(good.left == "HOLDS");
  CHECK(good.right == "HOLDS");
  CHECK(good.consistent);

  // the rational-part map fails the bound at sqrt2 and the product
  // inequality on an R_A pair; both failures must be detected.
  const auto bad = equivalence_check_thm2(AdditiveMap(2, f.one(), f.zero()), spec);
  CHECK(bad.left == "FAILS");
  CHECK(bad.right == "FAILS");
  CHECK(bad.consistent);
  REQUIRE(bad.details.size() == 2);
  bool sqrt2_witness = false;
  for (const auto& ce : bad.details[0].counterexamples) {
    if (ce.x == "0/1 + 1/1*sqrt(2)") sqrt2_witness = true;
  }
  CHECK(sqrt2_witness);

  // negative A(e): R_A is everything, the bound still fails off the rationals.
  const auto negated = equivalence_check_thm2(AdditiveMap(2, f.neg(f.one()), f.zero()), spec);
  CHECK(negated.left == "FAILS");
  CHECK(negated.consistent);

  CHECK_THROWS_AS(equivalence_check_thm2(AdditiveMap(2, f.zero(), f.sqrt_p()), spec),
                  HypothesisViolationError);
}

TEST_CASE("equivalence is consistent across seeded random maps") {
  const QuadField f(2);
  SplitMix64 rng(83);
  SampleSpec spec{7, 150, 40, true};
  for (int i = 0; i < 20; ++i) {
    const AdditiveMap map(2, f.make(random_rational(rng, 8), random_rational(rng, 8)),
                          f.make(random_rational(rng, 8), random_rational(rng, 8)));
    CHECK(equivalence_check_thm1(map, spec).consistent);
    if (f.sign(map.at_unit()) != 0) {
      CHECK(equivalence_check_thm2(map, spec).consistent);
    }
  }
}
