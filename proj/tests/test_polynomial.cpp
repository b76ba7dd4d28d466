#include <catch2/catch_amalgamated.hpp>

#include "csineq/carrier.hpp"
#include "csineq/polynomial.hpp"
#include "csineq/sampling.hpp"

using namespace csineq;

TEST_CASE("formal derivative") {
  CHECK(PolyQ::monomial(1, 3).derivative() == PolyQ::monomial(3, 2));
  CHECK(PolyQ::constant(5).derivative() == PolyQ{});
  CHECK((PolyQ{1, 3, 2}).derivative() == (PolyQ{3, 4}));  // 2t^2+3t+1 -> 4t+3
  CHECK(PolyQ{}.derivative() == PolyQ{});
}

TEST_CASE("exact Horner evaluation") {
  CHECK(PolyQ::monomial(1, 3).eval(2) == BigRational(8));
  CHECK(PolyQ{}.eval(make_rational(22, 7)) == BigRational(0));
  CHECK((PolyQ{3, 4}).eval(2) == BigRational(11));
  CHECK((PolyQ{1, 3, 2}).eval(make_rational(-1, 2)) == BigRational(0));  // (2t+1)(t+1) at -1/2
}

TEST_CASE("canonical degree with no trailing zeros") {
  const auto f = PolyQ::from_coefficients({BigRational(1), BigRational(2), BigRational(0), BigRational(0)});
  CHECK(f.degree() == 1);
  CHECK(PolyQ{}.degree() == -1);
  CHECK(PolyQ{}.is_zero());
  CHECK(PolyQ::constant(0) == PolyQ{});
  CHECK((PolyQ{1, 1} - PolyQ{1, 1}).is_zero());
}

TEST_CASE("polynomial ring laws") {
  const PolyMulCarrier carrier;
  SplitMix64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const PolyQ f = carrier.sample(rng, 20);
    const PolyQ g = carrier.sample(rng, 20);
    const PolyQ h = carrier.sample(rng, 20);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    // derivative is linear and Leibniz
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(43);
  const PolyMulCarrier carrier;
  for (int i = 0; i < 200; ++i) {
    const PolyQ f = carrier.sample(rng, 15);
    const PolyQ g = carrier.sample(rng, 15);
    const BigRational c = random_rational(rng, 15);
    CHECK((f * g).eval(c) == f.eval(c) * g.eval(c));
    CHECK((f + g).eval(c) == f.eval(c) + g.eval(c));
  }
}

TEST_CASE("polynomial serialization") {
  CHECK((PolyQ{1, 3, 2}).to_string() == "2/1*t^2 + 3/1*t + 1/1");
  CHECK((PolyQ{0, make_rational(-1, 2)}).to_string() == "-1/2*t");
  CHECK(PolyQ{}.to_string() == "0/1");
  CHECK(PolyQ::monomial(1, 3).to_string() == "1/1*t^3");
}
