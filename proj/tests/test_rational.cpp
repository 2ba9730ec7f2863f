#include <doctest.h>

#include <stdexcept>

#include "probfubini/rational.hpp"
#include "test_util.hpp"

using namespace probfubini;
using testutil::TestRng;

TEST_CASE("canonical form: lowest terms, positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("parse accepts num and num/den, rejects junk") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("+5/10").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("str round-trips through parse") {
  TestRng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testutil::rand_rational(rng, 1000, 1000);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("arithmetic is exact") {
  TestRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testutil::rand_rational(rng, 100, 50);
    const Rational b = testutil::rand_rational(rng, 100, 50);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(10, 4) == Rational(210));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(falling_factorial(5, 3) == Rational(60));
  CHECK(falling_factorial(2, 5) == Rational(0));  // hits the zero factor
  CHECK(rising_factorial(Rational(2), 3) == Rational(24));
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(0), 0) == Rational(1));
  // C(-2,3) = (-2)(-3)(-4)/3! = -4
  CHECK(binomial_rat(Rational(-2), 3) == Rational(-4));
  // C(-r,i) = (-1)^i C(r+i-1,i) at r=3/2, i=2: C(5/2,2)... check numerically
  CHECK(binomial_rat(Rational(-3, 2), 2) == Rational(15, 8));
}
