#include "probfubini/egf.hpp"

#include <stdexcept>

namespace probfubini {

TruncEGF::TruncEGF(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("TruncEGF: needs at least the constant term");
}

TruncEGF TruncEGF::one(int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  c[0] = Rational(1);
  return TruncEGF(std::move(c));
}

TruncEGF TruncEGF::zero(int order) {
  return TruncEGF(std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

const Rational& TruncEGF::coeff(int n) const {
  if (n < 0 || n > order()) throw std::invalid_argument("TruncEGF: coefficient index out of range");
  return c_[static_cast<size_t>(n)];
}

namespace {

void require_same_order(const TruncEGF& a, const TruncEGF& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncEGF: operands must have equal order");
}

}  // namespace

TruncEGF egf_mul(const TruncEGF& a, const TruncEGF& b) {
  require_same_order(a, b);
  const int n_max = a.order();
  std::vector<Rational> c(static_cast<size_t>(n_max) + 1, Rational(0));
  for (int n = 0; n <= n_max; ++n) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k)
      acc += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) * a.coeff(k) *
             b.coeff(n - k);
    c[static_cast<size_t>(n)] = std::move(acc);
  }
  return TruncEGF(std::move(c));
}

TruncEGF egf_inv(const TruncEGF& a) {
  if (a.coeff(0).is_zero())
    throw std::domain_error("TruncEGF: series with zero constant term is not invertible");
  const int n_max = a.order();
  std::vector<Rational> b(static_cast<size_t>(n_max) + 1, Rational(0));
  b[0] = Rational(1) / a.coeff(0);
  // Solve sum_k C(n,k) a_k b_{n-k} = [n==0] row by row.
  for (int n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k)
      acc += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) * a.coeff(k) *
             b[static_cast<size_t>(n - k)];
    b[static_cast<size_t>(n)] = -acc / a.coeff(0);
  }
  return TruncEGF(std::move(b));
}

TruncEGF egf_derive(const TruncEGF& a, int k) {
  if (k < 0 || k > a.order())
    throw std::invalid_argument("TruncEGF: derivative order exceeds series order");
  std::vector<Rational> c(static_cast<size_t>(a.order() - k) + 1, Rational(0));
  for (int n = 0; n <= a.order() - k; ++n) c[static_cast<size_t>(n)] = a.coeff(n + k);
  return TruncEGF(std::move(c));
}

Rational egf_coeff(const TruncEGF& a, int n) { return a.coeff(n); }

TruncEGF egf_add(const TruncEGF& a, const TruncEGF& b) {
  require_same_order(a, b);
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
  return TruncEGF(std::move(c));
}

TruncEGF egf_sub(const TruncEGF& a, const TruncEGF& b) {
  require_same_order(a, b);
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n)] = a.coeff(n) - b.coeff(n);
  return TruncEGF(std::move(c));
}

TruncEGF egf_scale(const TruncEGF& a, const Rational& s) {
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n)] = a.coeff(n) * s;
  return TruncEGF(std::move(c));
}

TruncEGF egf_pow(const TruncEGF& a, unsigned long j) {
  TruncEGF result = TruncEGF::one(a.order());
  TruncEGF base = a;
  while (j > 0) {
    if (j & 1UL) result = egf_mul(result, base);
    j >>= 1UL;
    if (j > 0) base = egf_mul(base, base);
  }
  return result;
}

}  // namespace probfubini
