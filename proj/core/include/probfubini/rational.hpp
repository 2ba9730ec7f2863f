#pragma once

// Exact arbitrary-precision rational scalar. Every quantity in the library
// (moments, Stirling entries, polynomial coefficients) is a Rational; no
// floating point enters a computation until a result is reported.
//
// Invariants: always stored in lowest terms with positive denominator
// (mpq_class canonical form), arithmetic never rounds.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace probfubini {

class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : q_(static_cast<signed long>(n)) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  // Parses "num", "num/den" (den a positive integer literal). Throws
  // std::invalid_argument on anything else.
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  double to_double() const { return q_.get_d(); }
  // Canonical form: "num" when den==1, else "num/den".
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

// n! as an exact Rational.
Rational factorial(unsigned long n);
// Integer binomial C(n,k); 0 when k > n.
Rational binomial(unsigned long n, unsigned long k);
// Falling factorial (j)_k = j(j-1)...(j-k+1).
Rational falling_factorial(unsigned long j, unsigned long k);
// Rising factorial a(a+1)...(a+k-1) for rational a; empty product is 1.
Rational rising_factorial(const Rational& a, unsigned long k);
// Generalized binomial C(a,k) = a(a-1)...(a-k+1)/k! for rational a.
Rational binomial_rat(const Rational& a, unsigned long k);

}  // namespace probfubini
