#pragma once

// Negative-order polylogarithms Li_{-n}(s) = sum_{i>=1} i^n s^i as exact
// rationals, and their k-fold multinomial convolution. Li_{-n} is obtained by
// n-fold application of the operator s d/ds to s/(1-s); tracking the result
// as P(s)/(1-s)^m keeps every step a polynomial update.

#include "probfubini/rational.hpp"

namespace probfubini {

// Exact Li_{-n}(s) for 0 <= s < 1 (throws std::domain_error otherwise).
// Li_0(s) = s/(1-s).
Rational polylog_neg(unsigned n, const Rational& s);

// k-fold multinomial convolution
//   Li^{*k}_{-n}(s) = sum_{n_1+...+n_k=n} n!/(n_1!...n_k!) prod_j Li_{-n_j}(s),
// with Li^{*0}_{-n}(s) = [n == 0]. Equals (s/r)^k E[S_k^n] for the geometric
// variate on {1,2,...} with r = 1-s.
Rational polylog_conv(unsigned n, unsigned k, const Rational& s);

}  // namespace probfubini
