#include "probfubini/fubini.hpp"

#include <functional>
#include <stdexcept>

#include "probfubini/egf.hpp"
#include "probfubini/stirling.hpp"

namespace probfubini {

RatPoly classical_fubini_poly(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = factorial(k) * stirling2(n, k);
  return RatPoly(std::move(c));
}

RatPoly prob_bell_poly(const DistSpec& dist, unsigned n) {
  MomentProvider moments(dist);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = prob_stirling(moments, n, k);
  return RatPoly(std::move(c));
}

RatPoly prob_fubini_poly(const DistSpec& dist, unsigned n) {
  MomentProvider moments(dist);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = factorial(k) * prob_stirling(moments, n, k);
  return RatPoly(std::move(c));
}

Rational prob_fubini_number(const DistSpec& dist, unsigned n) {
  return prob_fubini_poly(dist, n).eval(Rational(1));
}

RatPoly prob_fubini_higher(const DistSpec& dist, unsigned n, const Rational& alpha) {
  MomentProvider moments(dist);
  std::vector<Rational> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) c[i] = rising_factorial(alpha, i) * prob_stirling(moments, n, i);
  return RatPoly(std::move(c));
}

FubiniFamily::FubiniFamily(DistSpec dist, int max_n) : moments_(std::move(dist)) {
  const TriTable s = prob_stirling_table(moments_, max_n);
  polys_.reserve(static_cast<size_t>(max_n) + 1);
  numbers_.reserve(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      c[static_cast<size_t>(k)] = factorial(static_cast<unsigned long>(k)) * s.at(n, k);
    polys_.emplace_back(std::move(c));
    numbers_.push_back(polys_.back().eval(Rational(1)));
  }
}

RatPoly recurrence_rec1(const MomentProvider& moments, unsigned n, std::span<const RatPoly> lower) {
  if (n == 0) throw std::invalid_argument("recurrence_rec1: n must be >= 1");
  if (lower.size() < n) throw std::invalid_argument("recurrence_rec1: needs W_0..W_{n-1}");
  RatPoly acc;
  for (unsigned k = 1; k <= n; ++k) acc = acc + (binomial(n, k) * moments.get(k)) * lower[n - k];
  return RatPoly::monomial(Rational(1), 1) * acc;
}

RatPoly recurrence_rec1(const DistSpec& dist, unsigned n, std::span<const RatPoly> lower) {
  return recurrence_rec1(MomentProvider(dist), n, lower);
}

std::vector<RatPoly> fubini_polys_by_recurrence(const MomentProvider& moments, int max_n) {
  std::vector<RatPoly> w{RatPoly::constant(Rational(1))};
  for (int n = 1; n <= max_n; ++n) w.push_back(recurrence_rec1(moments, static_cast<unsigned>(n), w));
  return w;
}

bool check_thm9(const DistSpec& dist, unsigned n, const Rational& x0) {
  const FubiniFamily fam(dist, static_cast<int>(n) + 1);
  std::vector<Rational> v(n + 2);
  for (unsigned i = 0; i <= n + 1; ++i) v[i] = fam.poly(static_cast<int>(i)).eval(x0);
  Rational rhs(0);
  for (unsigned k = 0; k <= n; ++k) {
    Rational inner(0);
    for (unsigned i = 0; i <= k; ++i) inner += binomial(k, i) * v[i] * v[k - i];
    rhs += binomial(n, k) * fam.moments().get(n - k + 1) * inner;
  }
  return v[n + 1] == x0 * rhs;
}

bool check_thm_deriv(const DistSpec& dist, unsigned n, const Rational& x0) {
  const FubiniFamily fam(dist, static_cast<int>(n));
  std::vector<Rational> v(n + 1);
  for (unsigned i = 0; i <= n; ++i) v[i] = fam.poly(static_cast<int>(i)).eval(x0);
  Rational rhs(0);
  for (unsigned k = 0; k <= n; ++k) {
    Rational inner(0);
    for (unsigned i = 0; i <= k; ++i) inner += binomial(k, i) * v[i] * v[k - i];
    rhs += binomial(n, k) * (fam.moments().get(n - k) * inner - v[k] * v[n - k]);
  }
  return fam.poly(static_cast<int>(n)).derivative().eval(x0) == rhs;
}

bool integral_representation_check(const DistSpec& dist, unsigned n) {
  const RatPoly bell = prob_bell_poly(dist, n);
  std::vector<Rational> c(static_cast<size_t>(bell.degree()) + 1);
  for (int k = 0; k <= bell.degree(); ++k)
    c[static_cast<size_t>(k)] = factorial(static_cast<unsigned long>(k)) * bell.coeff(k);
  return RatPoly(std::move(c)) == prob_fubini_poly(dist, n);
}

namespace {

// Exact determinant by Gaussian elimination with row swaps for zero pivots.
Rational det_exact(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational f = m[row][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace

Rational fubini_det_at(const MomentProvider& moments, unsigned n, const Rational& x) {
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (unsigned i = 1; i <= n; ++i) {
    if (i < n) m[i - 1][i] = Rational(1);  // first superdiagonal
    for (unsigned j = 1; j <= i; ++j) {
      const unsigned d = i - j + 1;
      Rational w = x * moments.get(d) / factorial(d);
      if ((i - j) % 2 == 1) w = -w;
      m[i - 1][j - 1] = std::move(w);
    }
  }
  return factorial(n) * det_exact(std::move(m));
}

Rational fubini_det(const DistSpec& dist, unsigned n) {
  return fubini_det_at(MomentProvider(dist), n, Rational(1));
}

Rational fubini_trudi_at(const MomentProvider& moments, unsigned n, const Rational& x) {
  if (n == 0) return Rational(1);
  std::vector<Rational> weight(n + 1);  // weight[j] = x E[Y^j]/j!
  for (unsigned j = 1; j <= n; ++j) weight[j] = x * moments.get(j) / factorial(j);

  Rational total(0);
  std::vector<unsigned> mult(n + 1, 0);  // mult[j] = l_j
  // Enumerate integer partitions of n as multiplicity vectors, largest part
  // first.
  std::function<void(unsigned, unsigned)> recurse = [&](unsigned part, unsigned remaining) {
    if (remaining == 0) {
      unsigned blocks = 0;
      Rational term(1);
      for (unsigned j = 1; j <= n; ++j) {
        blocks += mult[j];
        for (unsigned t = 0; t < mult[j]; ++t) term *= weight[j];
        term /= factorial(mult[j]);
      }
      total += factorial(blocks) * term;  // multinomial = blocks!/prod l_j!
      return;
    }
    if (part == 0) return;
    for (unsigned count = 0; count * part <= remaining; ++count) {
      mult[part] = count;
      recurse(part - 1, remaining - count * part);
    }
    mult[part] = 0;
  };
  recurse(n, n);
  return factorial(n) * total;
}

Rational fubini_trudi(const DistSpec& dist, unsigned n) {
  return fubini_trudi_at(MomentProvider(dist), n, Rational(1));
}

Rational fubini_egf_value(const DistSpec& dist, unsigned n, const Rational& x0, int order) {
  if (order < static_cast<int>(n))
    throw std::invalid_argument("fubini_egf_value: order must be >= n");
  const TruncEGF m = mgf_series(dist, order);
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  c[0] = Rational(1);  // 1 - x0 (M(t) - 1); m_0 = 1 cancels
  for (int k = 1; k <= order; ++k) c[static_cast<size_t>(k)] = -x0 * m.coeff(k);
  return egf_inv(TruncEGF(std::move(c))).coeff(static_cast<int>(n));
}

}  // namespace probfubini
