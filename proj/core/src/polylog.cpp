#include "probfubini/polylog.hpp"

#include <stdexcept>
#include <vector>

#include "probfubini/poly.hpp"

namespace probfubini {

Rational polylog_neg(unsigned n, const Rational& s) {
  if (s < Rational(0) || s >= Rational(1))
    throw std::domain_error("polylog_neg: requires 0 <= s < 1");
  // Maintain Li_{-j}(z) = P(z)/(1-z)^m. Applying z d/dz maps
  // P -> z (P'(1-z) + m P) and m -> m+1.
  RatPoly p = RatPoly::monomial(Rational(1), 1);  // Li_0 = z/(1-z)
  long m = 1;
  const RatPoly z = RatPoly::monomial(Rational(1), 1);
  const RatPoly one_minus_z = RatPoly({Rational(1), Rational(-1)});
  for (unsigned j = 0; j < n; ++j) {
    p = z * (p.derivative() * one_minus_z + Rational(m) * p);
    ++m;
  }
  return p.eval(s) / (Rational(1) - s).pow(m);
}

namespace {

// Sum over compositions (n_1,...,n_k) of n with parts >= 0.
Rational conv_rec(unsigned n, unsigned k, const std::vector<Rational>& li, Rational weight,
                  unsigned remaining) {
  if (k == 0) return remaining == 0 ? weight : Rational(0);
  if (k == 1) return weight * li[remaining] / factorial(remaining);
  Rational acc(0);
  for (unsigned part = 0; part <= remaining; ++part)
    acc += conv_rec(n, k - 1, li, weight * li[part] / factorial(part), remaining - part);
  return acc;
}

}  // namespace

Rational polylog_conv(unsigned n, unsigned k, const Rational& s) {
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  std::vector<Rational> li(n + 1);
  for (unsigned j = 0; j <= n; ++j) li[j] = polylog_neg(j, s);
  // n! sum over compositions of prod Li_{-n_j}(s)/n_j!.
  return factorial(n) * conv_rec(n, k, li, Rational(1), n);
}

}  // namespace probfubini
