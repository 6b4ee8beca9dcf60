#include <random>

#include "chromgl/exactnum.hpp"
#include "doctest.h"

using namespace chromgl;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> low(-3, 3);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) {
    Rational r(coeff(rng), den(rng));
    r.canonicalize();
    c.push_back(r);
  }
  return LaurentPoly(low(rng), c);
}

RationalFunction random_ratfunc(std::mt19937& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return RationalFunction(random_poly(rng), den);
}

}  // namespace

TEST_CASE("laurent polynomials print and parse") {
  const LaurentPoly p = LaurentPoly::parse("t^2 + 4*t + 1");
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(1) == 4);
  CHECK(p.coeff(0) == 1);
  CHECK(p.str() == "t^2 + 4*t + 1");
  CHECK(LaurentPoly::parse("-t^-2 + 1/2*t").str() == "1/2*t - t^-2");
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("t^"), InvalidArgument);
  CHECK_THROWS_AS(LaurentPoly::parse(""), InvalidArgument);
}

TEST_CASE("laurent ring axioms and round trips on random inputs") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(LaurentPoly::parse(a.str()) == a);
    CHECK(a.inverted().inverted() == a);
    CHECK(a.shifted(3).shifted(-3) == a);
    const Rational q(3, 2);
    CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
  }
}

TEST_CASE("polynomial division and gcd") {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly a = (t - 1) * (t + 2) * (t * t + 1);
  const LaurentPoly b = (t - 1) * (t + 3);
  const auto d = poly_divmod(a, b);
  CHECK(d.quotient * b + d.remainder == a);
  CHECK(d.remainder.is_zero() == false);
  CHECK(poly_gcd(a, b) == t - 1);
  CHECK(poly_gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("rational functions are canonical") {
  const LaurentPoly t = LaurentPoly::t();
  const RationalFunction r(t * t - 1, t - 1);
  CHECK(r.is_laurent());
  CHECK(r == RationalFunction(t + 1));
  const RationalFunction s(LaurentPoly(2), LaurentPoly(2) * t * t);
  CHECK(s == RationalFunction(LaurentPoly::monomial(1, -2)));
  CHECK(RationalFunction(LaurentPoly(1), t - 1).str() == "(1)/(t - 1)");
  CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), LaurentPoly()), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), t - 1).eval(Rational(1)), DivisionByZero);
  CHECK_THROWS_AS(ratfunc_to_laurent(RationalFunction(LaurentPoly(1), t + 1)), NotDivisible);
  CHECK(ratfunc_to_laurent(RationalFunction(t * t * t - 1, t - 1)) == t * t + t + 1);
}

TEST_CASE("rational function field axioms on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const RationalFunction a = random_ratfunc(rng);
    const RationalFunction b = random_ratfunc(rng);
    const RationalFunction c = random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.inverted().inverted() == a);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(5, 1)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
}
