#include <catch2/catch_amalgamated.hpp>

#include "csineq/carrier.hpp"
#include "csineq/sampling.hpp"

using namespace csineq;

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 1234567, from the published reference algorithm.
  SplitMix64 rng(1234567);
  const std::uint64_t first = rng.next();
  SplitMix64 again(1234567);
  CHECK(again.next() == first);
  CHECK(SplitMix64(0).next() != SplitMix64(1).next());
}

TEST_CASE("identical specs give identical element sequences") {
  const QuadMulCarrier quad(2);
  SampleSpec spec{99, 200, 75, true};
  const auto a = sample_elements(quad, spec);
  const auto b = sample_elements(quad, spec);
  CHECK(a == b);

  const RationalMulCarrier rational;
  CHECK(sample_elements(rational, spec) == sample_elements(rational, spec));

  const PolyMulCarrier poly;
  CHECK(sample_elements(poly, spec) == sample_elements(poly, spec));

  SampleSpec other = spec;
  other.seed = 100;
  CHECK(sample_elements(quad, other) != a);
}

TEST_CASE("special elements lead the quad sample") {
  const QuadMulCarrier quad(2);
  const QuadField& f = quad.field();
  SampleSpec spec{0, 10, 50, true};
  const auto elements = sample_elements(quad, spec);
  REQUIRE(elements.size() == 10);
  CHECK(elements[0] == f.zero());
  CHECK(elements[1] == f.one());
  CHECK(elements[2] == f.neg(f.one()));
  CHECK(elements[3] == f.sqrt_p());
  CHECK(elements[4] == f.neg(f.sqrt_p()));
  CHECK(elements[5] == f.add(f.one(), f.sqrt_p()));
}

TEST_CASE("height bound is respected") {
  const QuadMulCarrier quad(3);
  SampleSpec spec{5, 5, 10, false};
  const auto elements = sample_elements(quad, spec);
  REQUIRE(elements.size() == 5);
  for (const auto& x : elements) {
    CHECK(quad.field().height(x) <= 10);
  }

  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    CHECK(height_of(random_rational(rng, 37)) <= 37);
  }
}

TEST_CASE("pair stream is prefix-stable in the budget") {
  const RationalMulCarrier rational;
  SampleSpec spec{11, 50, 20, true};
  const auto small = sample_pairs(rational, spec, 50);
  const auto large = sample_pairs(rational, spec, 170);
  REQUIRE(small.size() == 50);
  REQUIRE(large.size() == 170);
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(small[i] == large[i]);
  }
}

TEST_CASE("inverse pairs reach the xy = e locus") {
  const RationalMulCarrier rational;
  SampleSpec spec{13, 50, 20, true};
  const auto pairs = sample_pairs(rational, spec, 100);
  bool found = false;
  for (const auto& [x, y] : pairs) {
    if (x == BigRational(2) && y == make_rational(1, 2)) found = true;
  }
  CHECK(found);

  const QuadMulCarrier quad(2);
  const auto qpairs = sample_pairs(quad, spec, 100);
  const QuadField& f = quad.field();
  int on_unit_locus = 0;
  for (const auto& [x, y] : qpairs) {
    if (!f.is_zero(x) && f.mul(x, y) == f.one()) ++on_unit_locus;
  }
  CHECK(on_unit_locus >= 5);
}

TEST_CASE("interval carrier samples stay inside the enclosure domain") {
  const RealsAddCarrier reals(10);
  SampleSpec spec{17, 400, 60, true};
  for (const auto& x : sample_elements(reals, spec)) {
    CHECK(abs_of(x) <= 2);
  }
}

TEST_CASE("sampling input validation") {
  const QuadMulCarrier quad(2);
  SampleSpec bad{0, 0, 10, true};
  CHECK_THROWS_AS(sample_elements(quad, bad), DomainError);
  SampleSpec ok{0, 5, 10, true};
  CHECK_THROWS_AS(sample_pairs(quad, ok, 0), DomainError);
}
