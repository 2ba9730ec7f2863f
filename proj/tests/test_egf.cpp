#include <doctest.h>

#include <stdexcept>

#include "probfubini/egf.hpp"
#include "test_util.hpp"

using namespace probfubini;
using testutil::TestRng;

namespace {
TruncEGF series(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return TruncEGF(std::move(v));
}
}  // namespace

TEST_CASE("egf_mul examples") {
  CHECK(egf_mul(series({1, 0, 0}), series({1, 0, 0})) == series({1, 0, 0}));
  // e^t * e^t = e^{2t}: coefficients 2^n
  CHECK(egf_mul(series({1, 1, 1}), series({1, 1, 1})) == series({1, 2, 4}));
  // t * t = t^2 = 2 * t^2/2!
  CHECK(egf_mul(series({0, 1, 0}), series({0, 1, 0})) == series({0, 0, 2}));
  CHECK_THROWS_AS(egf_mul(series({1, 0}), series({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("egf_inv examples") {
  CHECK(egf_inv(series({1, 0, 0})) == series({1, 0, 0}));
  // 1/(2 - e^t) is the classical Fubini EGF: W_0..W_2 = 1, 1, 3
  CHECK(egf_inv(series({1, -1, -1})) == series({1, 1, 3}));
  CHECK(egf_inv(series({2, 0, 0})) == TruncEGF({Rational(1, 2), Rational(0), Rational(0)}));
  CHECK_THROWS_AS(egf_inv(series({0, 1, 1})), std::domain_error);
}

TEST_CASE("egf_derive examples") {
  CHECK(egf_derive(series({1, 1, 1}), 1) == series({1, 1}));
  CHECK(egf_derive(series({3, 1, 4}), 0) == series({3, 1, 4}));
  CHECK(egf_derive(series({0, 0, 2}), 2) == series({2}));
  CHECK_THROWS_AS(egf_derive(series({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("egf_coeff examples") {
  CHECK(egf_coeff(series({5, 1, 2}), 0) == Rational(5));
  CHECK(egf_coeff(egf_inv(series({1, -1, -1})), 2) == Rational(3));
  CHECK(egf_coeff(series({1, 7}), 1) == Rational(7));
  CHECK_THROWS_AS(egf_coeff(series({1, 7}), 2), std::invalid_argument);
}

TEST_CASE("inverse property: a * inv(a) == 1 exactly") {
  TestRng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const TruncEGF a = testutil::rand_series(rng, 8, /*invertible=*/true);
    CHECK(egf_mul(a, egf_inv(a)) == TruncEGF::one(8));
  }
}

TEST_CASE("mul is commutative and associative") {
  TestRng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const TruncEGF a = testutil::rand_series(rng, 7, false);
    const TruncEGF b = testutil::rand_series(rng, 7, false);
    const TruncEGF c = testutil::rand_series(rng, 7, false);
    CHECK(egf_mul(a, b) == egf_mul(b, a));
    CHECK(egf_mul(egf_mul(a, b), c) == egf_mul(a, egf_mul(b, c)));
  }
}

TEST_CASE("Leibniz rule at reduced order") {
  TestRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const TruncEGF a = testutil::rand_series(rng, 7, false);
    const TruncEGF b = testutil::rand_series(rng, 7, false);
    const TruncEGF lhs = egf_derive(egf_mul(a, b), 1);
    const TruncEGF rhs = egf_add(egf_mul(egf_derive(a, 1), testutil::truncate(b, 6)),
                                 egf_mul(testutil::truncate(a, 6), egf_derive(b, 1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("egf_pow matches repeated multiplication") {
  TestRng rng(37);
  const TruncEGF a = testutil::rand_series(rng, 6, false);
  CHECK(egf_pow(a, 0) == TruncEGF::one(6));
  CHECK(egf_pow(a, 1) == a);
  CHECK(egf_pow(a, 3) == egf_mul(egf_mul(a, a), a));
  CHECK(egf_pow(a, 5) == egf_mul(egf_pow(a, 4), a));
}
