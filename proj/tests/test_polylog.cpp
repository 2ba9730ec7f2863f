#include <doctest.h>

#include <cmath>

#include "probfubini/moments.hpp"
#include "probfubini/polylog.hpp"

using namespace probfubini;

TEST_CASE("polylog_neg base case and examples") {
  const Rational s(1, 2);
  CHECK(polylog_neg(0, s) == Rational(1));  // s/(1-s) at 1/2
  CHECK(polylog_neg(1, s) == Rational(2));  // s/(1-s)^2
  CHECK(polylog_neg(2, s) == Rational(6));  // s(1+s)/(1-s)^3
  CHECK(polylog_neg(3, s) == Rational(26));
  CHECK(polylog_neg(0, Rational(1, 3)) == Rational(1, 2));
  CHECK(polylog_neg(4, Rational(0)) == Rational(0));
}

TEST_CASE("polylog_neg rejects s outside [0,1)") {
  CHECK_THROWS_AS(polylog_neg(2, Rational(1)), std::domain_error);
  CHECK_THROWS_AS(polylog_neg(2, Rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(polylog_neg(2, Rational(-1, 2)), std::domain_error);
}

TEST_CASE("polylog_neg matches the truncated defining series") {
  for (const Rational& s : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
    for (unsigned n = 0; n <= 6; ++n) {
      double sum = 0;
      const double sd = s.to_double();
      for (int i = 1; i <= 400; ++i) sum += std::pow(i, static_cast<double>(n)) * std::pow(sd, i);
      CHECK(std::abs(polylog_neg(n, s).to_double() - sum) < 1e-8);
    }
  }
}

TEST_CASE("polylog_conv conventions") {
  CHECK(polylog_conv(0, 0, Rational(1, 2)) == Rational(1));
  CHECK(polylog_conv(3, 0, Rational(1, 2)) == Rational(0));
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(polylog_conv(n, 1, Rational(1, 2)) == polylog_neg(n, Rational(1, 2)));
}

TEST_CASE("Li^{*2}_{-2}(1/2) = E S_2^2 = 20, by brute-force double sum") {
  // sum_{a,b>=1} (a+b)^2 r^2 s^{a+b-2} at r = s = 1/2.
  double brute = 0;
  for (int a = 1; a <= 120; ++a)
    for (int b = 1; b <= 120; ++b)
      brute += std::pow(a + b, 2.0) * 0.25 * std::pow(0.5, a + b - 2);
  CHECK(std::abs(brute - 20.0) < 1e-9);
  CHECK(polylog_conv(2, 2, Rational(1, 2)) == Rational(20));
  CHECK(sum_moment(DistSpec::geometric(Rational(1, 2)), 2, 2) == Rational(20));
}

TEST_CASE("polylog_conv equals (s/r)^k E S_k^n exactly") {
  for (const Rational& s : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
    const Rational r = Rational(1) - s;
    const DistSpec dist = DistSpec::geometric(r);
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned k = 0; k <= 6; ++k) {
        const Rational expected = (s / r).pow(static_cast<long>(k)) * sum_moment(dist, k, n);
        CHECK(polylog_conv(n, k, s) == expected);
      }
    }
  }
}
