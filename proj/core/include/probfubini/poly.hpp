#pragma once

// Dense polynomial in x over exact rationals. Trailing zero coefficients are
// trimmed on construction; the zero polynomial is the single coefficient 0.

#include <span>
#include <string>
#include <vector>

#include "probfubini/rational.hpp"

namespace probfubini {

class RatPoly {
public:
  RatPoly() : c_{Rational(0)} {}
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(Rational v);
  // coeff * x^k
  static RatPoly monomial(Rational coeff, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  // Coefficient of x^k; 0 beyond the degree.
  const Rational& coeff(int k) const;
  std::span<const Rational> coeffs() const { return c_; }

  Rational eval(const Rational& x) const;  // Horner
  RatPoly derivative() const;
  // p(s*x)
  RatPoly scale_arg(const Rational& s) const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, const RatPoly& p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // Human-readable form, e.g. "2*x + 2*x^2"; "0" for the zero polynomial.
  std::string str() const;

private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace probfubini
