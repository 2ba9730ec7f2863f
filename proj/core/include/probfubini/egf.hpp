#pragma once

// Truncated exponential-generating-function series with exact rational
// coefficients. A TruncEGF of order N holds c_0..c_N and stands for
// sum_{n<=N} c_n t^n/n!, i.e. c_n = n! * [t^n]. Storing n![t^n] means a
// moment sequence E[Y^n] maps directly onto coefficients of E e^{tY}.
//
// Values are immutable after construction; all operations are pure and
// require equal orders (the caller truncates first).

#include <span>
#include <vector>

#include "probfubini/rational.hpp"

namespace probfubini {

class TruncEGF {
public:
  // coeffs = c_0..c_N; must be non-empty.
  explicit TruncEGF(std::vector<Rational> coeffs);

  // The series 1 (= 1,0,...,0).
  static TruncEGF one(int order);
  static TruncEGF zero(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int n) const;  // throws std::invalid_argument if n > order
  std::span<const Rational> coeffs() const { return c_; }

  friend bool operator==(const TruncEGF& a, const TruncEGF& b) { return a.c_ == b.c_; }

private:
  std::vector<Rational> c_;
};

// Cauchy product with binomial weights: c_n = sum_k C(n,k) a_k b_{n-k}.
TruncEGF egf_mul(const TruncEGF& a, const TruncEGF& b);

// Multiplicative inverse by forward substitution; requires a_0 != 0
// (throws std::domain_error otherwise). egf_mul(a, egf_inv(a)) == one.
TruncEGF egf_inv(const TruncEGF& a);

// k-th derivative d^k/dt^k: coefficient shift c_n -> c_{n+k}, order drops by k.
TruncEGF egf_derive(const TruncEGF& a, int k);

// c_n, which already equals n! * [t^n].
Rational egf_coeff(const TruncEGF& a, int n);

TruncEGF egf_add(const TruncEGF& a, const TruncEGF& b);
TruncEGF egf_sub(const TruncEGF& a, const TruncEGF& b);
TruncEGF egf_scale(const TruncEGF& a, const Rational& s);
// a^j by repeated squaring; a^0 == one.
TruncEGF egf_pow(const TruncEGF& a, unsigned long j);

}  // namespace probfubini
