#pragma once

// Exact raw moments E[Y^n] for the distribution catalog, moments of IID sums
// S_j = Y_1 + ... + Y_j (S_0 = 0), and seeded sampling for the Monte Carlo
// verifier.

#include <mutex>
#include <random>
#include <vector>

#include "probfubini/dist.hpp"
#include "probfubini/egf.hpp"
#include "probfubini/rational.hpp"

namespace probfubini {

using Rng = std::mt19937_64;

// Exact E[Y^n]. Degenerate(c) -> c^n; Bernoulli(p) -> p for n>=1;
// Poisson(l) -> sum_k S(n,k) l^k; StdExponential -> n!;
// GeometricOnSupport1(r) -> (r/s) Li_{-n}(s) with s = 1-r.
Rational moment(const DistSpec& dist, unsigned n);

// Lazily grown, thread-safe cache of a distribution's moment sequence.
// Entries are value-immutable once written; recomputation yields identical
// values, so a coarse lock suffices.
class MomentProvider {
public:
  explicit MomentProvider(DistSpec dist) : dist_(std::move(dist)) {}

  const DistSpec& dist() const { return dist_; }
  Rational get(unsigned n) const;

private:
  DistSpec dist_;
  mutable std::mutex mu_;
  mutable std::vector<Rational> cache_;  // cache_[n] = E[Y^n]; m_0 = 1 always
};

// M(t) = E e^{tY} as a TruncEGF: coefficient n is moment(dist, n).
TruncEGF mgf_series(const DistSpec& dist, int order);

// E[S_j^n] via the j-th EGF power of M(t). sum_moment(dist, 0, n) honours the
// S_0 = 0 convention (1 when n == 0, else 0).
Rational sum_moment(const DistSpec& dist, unsigned j, unsigned n);

// Incremental sweep over j = 0,1,2,...: keeps M(t)^j and advances one
// multiplication per step. Used by the truncated-series checks, which need
// E[S_j^n] for every j up to a truncation point.
class SumMomentSweep {
public:
  SumMomentSweep(const DistSpec& dist, int order)
      : mgf_(mgf_series(dist, order)), power_(TruncEGF::one(order)) {}

  unsigned j() const { return j_; }
  // E[S_j^n] at the current j.
  Rational moment(unsigned n) const { return power_.coeff(static_cast<int>(n)); }
  void advance() {
    power_ = egf_mul(power_, mgf_);
    ++j_;
  }

private:
  TruncEGF mgf_;
  TruncEGF power_;
  unsigned j_ = 0;
};

// One variate. All catalog samplers are inverse-transform/acceptance schemes
// over raw mt19937_64 output, so a fixed seed reproduces the same stream on
// any platform. GeometricOnSupport1 samples on {1,2,...}.
double sample(const DistSpec& dist, Rng& rng);

}  // namespace probfubini
