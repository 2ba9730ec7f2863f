#include "probfubini/moments.hpp"

#include <cmath>

#include "probfubini/polylog.hpp"
#include "probfubini/stirling.hpp"

namespace probfubini {

Rational moment(const DistSpec& dist, unsigned n) {
  if (n == 0) return Rational(1);
  return std::visit(
      [n](const auto& d) -> Rational {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Degenerate>) {
          return d.c.pow(n);
        } else if constexpr (std::is_same_v<T, Bernoulli>) {
          return d.p;  // Y^n = Y on {0,1}
        } else if constexpr (std::is_same_v<T, Poisson>) {
          // Touchard form: E Y^n = sum_k S(n,k) lambda^k.
          Rational acc(0);
          for (unsigned k = 1; k <= n; ++k) acc += stirling2(n, k) * d.lambda.pow(k);
          return acc;
        } else if constexpr (std::is_same_v<T, GeometricOnSupport1>) {
          const Rational s = Rational(1) - d.r;
          if (s.is_zero()) return Rational(1);  // Y degenerate at 1
          return (d.r / s) * polylog_neg(n, s);
        } else {
          return factorial(n);  // StdExponential: Gamma(n+1)
        }
      },
      dist.kind());
}

Rational MomentProvider::get(unsigned n) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (cache_.size() <= n) cache_.push_back(moment(dist_, static_cast<unsigned>(cache_.size())));
  return cache_[n];
}

TruncEGF mgf_series(const DistSpec& dist, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<size_t>(n)] = moment(dist, static_cast<unsigned>(n));
  return TruncEGF(std::move(c));
}

Rational sum_moment(const DistSpec& dist, unsigned j, unsigned n) {
  if (j == 0) return n == 0 ? Rational(1) : Rational(0);
  return egf_pow(mgf_series(dist, static_cast<int>(n)), j).coeff(static_cast<int>(n));
}

namespace {

double next_uniform(Rng& rng) {
  // 53 uniform bits in [0,1).
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double sample(const DistSpec& dist, Rng& rng) {
  return std::visit(
      [&rng](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Degenerate>) {
          return d.c.to_double();
        } else if constexpr (std::is_same_v<T, Bernoulli>) {
          return next_uniform(rng) < d.p.to_double() ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Poisson>) {
          // Knuth's product method; fine for the desk-scale lambdas here.
          const double limit = std::exp(-d.lambda.to_double());
          double prod = 1.0;
          unsigned k = 0;
          do {
            ++k;
            prod *= next_uniform(rng);
          } while (prod > limit);
          return static_cast<double>(k - 1);
        } else if constexpr (std::is_same_v<T, GeometricOnSupport1>) {
          const double s = 1.0 - d.r.to_double();
          if (s <= 0.0) return 1.0;
          const double u = next_uniform(rng);
          // Inverse CDF on {1,2,...}: smallest k with 1 - s^k >= u.
          const double k = std::floor(std::log1p(-u) / std::log(s)) + 1.0;
          return k < 1.0 ? 1.0 : k;
        } else {
          return -std::log1p(-next_uniform(rng));  // StdExponential
        }
      },
      dist.kind());
}

}  // namespace probfubini
