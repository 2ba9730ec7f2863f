#pragma once

// Series-transformation machinery, distribution-specific identities, and the
// truncated-series / Monte Carlo verifiers.
//
// Every truncated check computes its terms exactly as rationals, accumulates
// them in compensated floating point, and compares against an exact target
// that is rationally computed and floated once at the end. Checks whose
// series can diverge run an empirical ratio test on the computed terms and
// throw std::domain_error instead of reporting a bogus sum.

#include <cstdint>

#include "probfubini/dist.hpp"
#include "probfubini/poly.hpp"
#include "probfubini/rational.hpp"

namespace probfubini {

// The closed catalog of analytic outer functions g for the series
// transformation formula: e^x, 1/(1-x), 1/(1-x)^r. Each member has
// closed-form derivatives at 0 and at x.
struct GSpec {
  enum class Kind { Exp, Geom, NegBin };
  Kind kind = Kind::Exp;
  Rational r;  // NegBin exponent, r > 0

  static GSpec exp() { return {Kind::Exp, Rational(0)}; }
  static GSpec geom() { return {Kind::Geom, Rational(0)}; }
  static GSpec negbin(Rational r);
};

// Result of a truncated-series comparison. `reference` is the exact side,
// floated once. `converged` holds iff |partial_sum - reference| <= tol and
// the last term magnitude is below tol.
struct TailReport {
  double partial_sum = 0.0;
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  bool converged = false;
  double reference = 0.0;
};

// Monte Carlo result; reproducible given (seed, samples).
struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

// sum_i g^{(i)}(0) E f(S_i) x0^i / i!  vs  sum_n f_n sum_k S_Y(n,k) g^{(k)}(x0) x0^k.
// f is a polynomial (coefficients f_n = f^{(n)}(0)/n!), so the right side is
// a finite, exact sum (times e^{x0} or (1-x0)^{-r} where g demands it).
// Geom/NegBin require |x0| < 1.
TailReport series_transform_check(const RatPoly& f, const GSpec& g, const DistSpec& dist,
                                  const Rational& x0, int trunc_i, double tol);

// sum_i E[S_i^n] x0^i  vs  (1/(1-x0)) W_n^Y(x0/(1-x0)); requires 0 < |x0| < 1.
TailReport power_sum_identity(const DistSpec& dist, unsigned n, const Rational& x0, int trunc_i,
                              double tol);

// (1/2) sum_i E[S_i^n]/2^i  vs  W_n^Y(1).
TailReport fubini_number_series_check(const DistSpec& dist, unsigned n, int trunc_i, double tol);

// sum_i C(-r,i) E[S_i^n] x0^i  vs  (1+x0)^{-r} W_n^Y(-x0/(1+x0); r).
// (The binomial series with signed C(-r,i) resums against (1+x0)^{-r}; the
// r = 1 case is the power-sum identity at -x0.) Requires r > 0, 0 < |x0| < 1.
TailReport negbin_transform_check(const DistSpec& dist, unsigned n, const Rational& r,
                                  const Rational& x0, int trunc_i, double tol);

// Poisson-weighted moment series sum_k E[S_k^n] e^{-x0} x0^k / k!  vs
// B_n^Y(x0); requires x0 > 0. Always converges; tol only governs the flag.
TailReport dobinski_check(const DistSpec& dist, unsigned n, const Rational& x0, int trunc_k,
                          double tol);

// Geometric-mixture definition: sum_i E[S_i^n] P{G_{eta(x0)} = i+1}  vs
// W_n^Y(x0), with eta(x) = 1/(1+x); requires x0 >= 0.
TailReport geometric_mixture_check(const DistSpec& dist, unsigned n, const Rational& x0,
                                   int trunc_i, double tol);

// Polylog-convolution limit for a geometric Y (requires 0 < r < 1):
//   sum_k p q^k (r/s)^k Li^{*k}_{-n}(s)        -> W_n^Y(x0), p = 1/(1+x0),
//   sum_k (r/s)^k Li^{*k}_{-n}(s) (x0/(1+x0))^k -> (1+x0) W_n^Y(x0).
// The second series' argument q/p comes from the success probability
// p = (1+x0)/(1+2x0). Convolutions advance by one binomial convolution per k.
// converged requires both limits within tol; the report describes the first.
TailReport polylog_limit_check(const DistSpec& dist, unsigned n, const Rational& x0, int trunc,
                               double tol);

// Apostol-Euler identity for Y ~ Bernoulli(p):
//   E_n(-cp; x) == sum_k C(n,k) W_k^Y(c) x^{n-k}
// as exact polynomials in x, where E_n(c~;x) has EGF e^{xt}/(1+c~(e^t-1)).
// Also checks the x = 0 corollary E_n(-cp) == W_n^Y(c). Requires 0 < p <= 1
// and -1 <= cp <= 0; `order` >= n controls the series truncation.
bool apostol_euler_check(const Rational& p, const Rational& c, unsigned n, int order);

// Coefficientwise exact comparison, in u up to `order`, of
//   (1/(1-x0)) sum_{m>=k} C(m,k) (u^m/m!) v0^{m-k} W_m^Y(x0/(1-x0))
// against (u^k/k!) D^k_w [1/(1 - x0 E e^{wY})] with w = u v0. Requires
// x0 != 1 and k <= order.
bool prop31_check(const DistSpec& dist, unsigned k, const Rational& x0, const Rational& v0,
                  int order);

// Series-in-y comparison of
//   (1/(1-x0)) sum_{m>=1} E[S_m^k] (y^m/m!) W_m^Y(x0/(1-x0))
// against sum_j x0^j sum_i S_Y(k,i) y^i D_y^i (E e^{yY})^j truncated at
// trunc_j; coefficients m = 1..order compared within tol after floating
// (the m = 0 coefficient is excluded: the left sum starts at m = 1).
// partial_sum/reference report the m = order coefficient pair. |x0| < 1.
TailReport prop32_check(const DistSpec& dist, unsigned k, const Rational& x0, int trunc_j,
                        int order, double tol);

// Monte Carlo estimate of E[(S_{G-1})^n] with G ~ Geometric(1/(1+x0)) on
// {1,2,...}: a direct stochastic reading of the mixture definition of
// W_n^Y(x0). Single sequential stream seeded with `seed`; bit-identical for
// fixed (seed, samples).
Estimate mc_fubini(const DistSpec& dist, unsigned n, const Rational& x0, long samples,
                   std::uint64_t seed);

}  // namespace probfubini
