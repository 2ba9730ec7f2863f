#pragma once

// Probabilistic Bell and Fubini polynomials W_n^Y(x) and numbers
// W_n^Y = W_n^Y(1), the alpha-th order family, the recurrences, and the
// independent determinant / partition-sum representations.
//
// Four routes compute the same numbers and stay deliberately independent:
//   def    coefficient sum over S_Y(n,k) (partial-Bell route)
//   rec    the first-moment recurrence seeded only with W_0 = 1
//   det    n! times a lower-Hessenberg determinant, by Gaussian elimination
//   trudi  weighted multinomial sum over integer partitions of n

#include <span>
#include <vector>

#include "probfubini/dist.hpp"
#include "probfubini/moments.hpp"
#include "probfubini/poly.hpp"
#include "probfubini/rational.hpp"

namespace probfubini {

// Classical W_n(x) = sum_k k! S(n,k) x^k.
RatPoly classical_fubini_poly(unsigned n);

// B_n^Y(x) = sum_k S_Y(n,k) x^k.
RatPoly prob_bell_poly(const DistSpec& dist, unsigned n);

// W_n^Y(x) = sum_k S_Y(n,k) k! x^k.
RatPoly prob_fubini_poly(const DistSpec& dist, unsigned n);

// W_n^Y = W_n^Y(1).
Rational prob_fubini_number(const DistSpec& dist, unsigned n);

// Alpha-th order polynomials: sum_i C(alpha+i-1,i) i! x^i S_Y(n,i); the
// generalized binomial times i! is the rising factorial alpha^(i), so any
// rational alpha is accepted. alpha = 1 gives prob_fubini_poly.
RatPoly prob_fubini_higher(const DistSpec& dist, unsigned n, const Rational& alpha);

// The whole family W_0..W_max built by the definitional route, with the
// evaluated numbers alongside. Immutable once constructed.
class FubiniFamily {
public:
  FubiniFamily(DistSpec dist, int max_n);

  const DistSpec& dist() const { return moments_.dist(); }
  const MomentProvider& moments() const { return moments_; }
  int max_n() const { return static_cast<int>(polys_.size()) - 1; }
  const RatPoly& poly(int n) const { return polys_[static_cast<size_t>(n)]; }
  const Rational& number(int n) const { return numbers_[static_cast<size_t>(n)]; }

private:
  MomentProvider moments_;
  std::vector<RatPoly> polys_;
  std::vector<Rational> numbers_;
};

// One step of the first-moment recurrence
//   W_n^Y(x) = x sum_{k=1}^n C(n,k) E[Y^k] W_{n-k}^Y(x),
// given W_0..W_{n-1} in `lower`.
RatPoly recurrence_rec1(const MomentProvider& moments, unsigned n, std::span<const RatPoly> lower);
RatPoly recurrence_rec1(const DistSpec& dist, unsigned n, std::span<const RatPoly> lower);

// W_0..W_max generated purely by the recurrence from W_0 = 1.
std::vector<RatPoly> fubini_polys_by_recurrence(const MomentProvider& moments, int max_n);

// W_{n+1}^Y(x0) == x0 sum_k C(n,k) E Y^{n-k+1} sum_i C(k,i) W_i(x0) W_{k-i}(x0),
// exactly.
bool check_thm9(const DistSpec& dist, unsigned n, const Rational& x0);

// d/dx W_n^Y at x0 == sum_k C(n,k) (E Y^{n-k} sum_i C(k,i) W_i W_{k-i}
//                                   - W_k W_{n-k}) at x0, exactly.
bool check_thm_deriv(const DistSpec& dist, unsigned n, const Rational& x0);

// Replacing x^k by k! x^k inside B_n^Y (the exact value of the gamma
// integral E_V[B_n^Y(xV)]) reproduces W_n^Y as a polynomial.
bool integral_representation_check(const DistSpec& dist, unsigned n);

// n! times the n x n lower-Hessenberg determinant with entries
// (-1)^{i-j} E[Y^{i-j+1}]/(i-j+1)! below the diagonal and 1 on the first
// superdiagonal, evaluated by exact Gaussian elimination. n = 0 yields the
// empty determinant, 1.
Rational fubini_det(const DistSpec& dist, unsigned n);

// Trudi partition sum: n! sum over l_1+2l_2+...+n l_n = n of
// multinomial(l_1+...+l_n; l_1..l_n) prod_j (E[Y^j]/j!)^{l_j}.
Rational fubini_trudi(const DistSpec& dist, unsigned n);

// x-weighted generalizations of the two witnesses above (w(k) carries a
// factor x), so every route can evaluate W_n^Y(x); x = 1 recovers the
// number forms.
Rational fubini_det_at(const MomentProvider& moments, unsigned n, const Rational& x);
Rational fubini_trudi_at(const MomentProvider& moments, unsigned n, const Rational& x);

// EGF oracle: n! [t^n] of 1/(1 - x0 (M(t) - 1)) at truncation `order` >= n.
Rational fubini_egf_value(const DistSpec& dist, unsigned n, const Rational& x0, int order);

}  // namespace probfubini
