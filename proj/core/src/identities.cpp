#include "probfubini/identities.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "probfubini/egf.hpp"
#include "probfubini/fubini.hpp"
#include "probfubini/polylog.hpp"
#include "probfubini/stirling.hpp"

namespace probfubini {

GSpec GSpec::negbin(Rational r) {
  if (r <= Rational(0)) throw std::invalid_argument("GSpec: NegBin requires r > 0");
  return {Kind::NegBin, std::move(r)};
}

namespace {

// Kahan compensated accumulator.
class KahanSum {
public:
  void add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

// Empirical divergence gate, applied to the tail after summation: the last
// three term magnitudes strictly grow and the final one is no longer
// negligible. (Catalog series may grow for a while before the geometric
// factor wins, so only sustained growth at the truncation point counts.)
void throw_if_diverging(const std::vector<double>& mags, double tol) {
  const size_t n = mags.size();
  if (n < 3) return;
  if (mags[n - 1] > mags[n - 2] && mags[n - 2] > mags[n - 3] && mags[n - 1] > tol)
    throw std::domain_error("truncated series diverges empirically (growing terms)");
}

TailReport finish_report(const KahanSum& sum, int terms, double last_mag, double reference,
                         double tol) {
  TailReport rep;
  rep.partial_sum = sum.value();
  rep.terms_used = terms;
  rep.last_term_magnitude = last_mag;
  rep.reference = reference;
  rep.converged = std::abs(rep.partial_sum - reference) <= tol && last_mag <= tol;
  return rep;
}

}  // namespace

TailReport series_transform_check(const RatPoly& f, const GSpec& g, const DistSpec& dist,
                                  const Rational& x0, int trunc_i, double tol) {
  if (g.kind != GSpec::Kind::Exp && abs(x0) >= Rational(1))
    throw std::domain_error("series_transform_check: |x| < 1 required for this g");

  // Left side: sum_i g^{(i)}(0)/i! * E f(S_i) * x0^i, exact terms.
  const int deg = f.degree();
  SumMomentSweep sweep(dist, deg);
  KahanSum lhs;
  Rational xp(1);
  std::vector<double> mags;
  double last_mag = 0.0;
  for (int i = 0; i <= trunc_i; ++i) {
    Rational ef(0);  // E f(S_i)
    for (int m = 0; m <= deg; ++m) ef += f.coeff(m) * sweep.moment(static_cast<unsigned>(m));
    Rational weight;  // g^{(i)}(0)/i!
    switch (g.kind) {
      case GSpec::Kind::Exp:
        weight = Rational(1) / factorial(static_cast<unsigned long>(i));
        break;
      case GSpec::Kind::Geom:
        weight = Rational(1);
        break;
      case GSpec::Kind::NegBin:
        weight = binomial_rat(g.r + Rational(i) - Rational(1), static_cast<unsigned long>(i));
        break;
    }
    const Rational term = weight * ef * xp;
    last_mag = std::abs(term.to_double());
    mags.push_back(last_mag);
    lhs.add(term.to_double());
    xp *= x0;
    sweep.advance();
  }
  throw_if_diverging(mags, tol);

  // Right side: finite and exact up to one scalar factor.
  Rational exact(0);
  double scalar = 1.0;
  switch (g.kind) {
    case GSpec::Kind::Exp: {
      for (int m = 0; m <= deg; ++m) exact += f.coeff(m) * prob_bell_poly(dist, static_cast<unsigned>(m)).eval(x0);
      scalar = std::exp(x0.to_double());
      break;
    }
    case GSpec::Kind::Geom: {
      const Rational z = x0 / (Rational(1) - x0);
      for (int m = 0; m <= deg; ++m) exact += f.coeff(m) * prob_fubini_poly(dist, static_cast<unsigned>(m)).eval(z);
      exact /= Rational(1) - x0;
      break;
    }
    case GSpec::Kind::NegBin: {
      const Rational z = x0 / (Rational(1) - x0);
      for (int m = 0; m <= deg; ++m)
        exact += f.coeff(m) * prob_fubini_higher(dist, static_cast<unsigned>(m), g.r).eval(z);
      if (g.r.is_integer()) {
        exact *= (Rational(1) - x0).pow(-g.r.numerator().get_si());
      } else {
        scalar = std::pow((Rational(1) - x0).to_double(), -g.r.to_double());
      }
      break;
    }
  }
  return finish_report(lhs, trunc_i + 1, last_mag, scalar * exact.to_double(), tol);
}

TailReport power_sum_identity(const DistSpec& dist, unsigned n, const Rational& x0, int trunc_i,
                              double tol) {
  if (x0.is_zero() || abs(x0) >= Rational(1))
    throw std::domain_error("power_sum_identity: requires 0 < |x| < 1");
  SumMomentSweep sweep(dist, static_cast<int>(n));
  KahanSum lhs;
  Rational xp(1);
  std::vector<double> mags;
  double last_mag = 0.0;
  for (int i = 0; i <= trunc_i; ++i) {
    const Rational term = sweep.moment(n) * xp;
    last_mag = std::abs(term.to_double());
    mags.push_back(last_mag);
    lhs.add(term.to_double());
    xp *= x0;
    sweep.advance();
  }
  throw_if_diverging(mags, tol);
  const Rational z = x0 / (Rational(1) - x0);
  const Rational exact = prob_fubini_poly(dist, n).eval(z) / (Rational(1) - x0);
  return finish_report(lhs, trunc_i + 1, last_mag, exact.to_double(), tol);
}

TailReport fubini_number_series_check(const DistSpec& dist, unsigned n, int trunc_i, double tol) {
  SumMomentSweep sweep(dist, static_cast<int>(n));
  KahanSum lhs;
  Rational w(1, 2);  // (1/2) (1/2)^i
  double last_mag = 0.0;
  for (int i = 0; i <= trunc_i; ++i) {
    const Rational term = sweep.moment(n) * w;
    last_mag = std::abs(term.to_double());
    lhs.add(term.to_double());
    w /= Rational(2);
    sweep.advance();
  }
  const double exact = prob_fubini_number(dist, n).to_double();
  return finish_report(lhs, trunc_i + 1, last_mag, exact, tol);
}

TailReport negbin_transform_check(const DistSpec& dist, unsigned n, const Rational& r,
                                  const Rational& x0, int trunc_i, double tol) {
  if (r <= Rational(0)) throw std::domain_error("negbin_transform_check: requires r > 0");
  if (x0.is_zero() || abs(x0) >= Rational(1))
    throw std::domain_error("negbin_transform_check: requires 0 < |x| < 1");
  SumMomentSweep sweep(dist, static_cast<int>(n));
  KahanSum lhs;
  Rational xp(1);
  std::vector<double> mags;
  double last_mag = 0.0;
  for (int i = 0; i <= trunc_i; ++i) {
    const Rational term = binomial_rat(-r, static_cast<unsigned long>(i)) * sweep.moment(n) * xp;
    last_mag = std::abs(term.to_double());
    mags.push_back(last_mag);
    lhs.add(term.to_double());
    xp *= x0;
    sweep.advance();
  }
  throw_if_diverging(mags, tol);
  const Rational z = -x0 / (Rational(1) + x0);
  const Rational wpart = prob_fubini_higher(dist, n, r).eval(z);
  double reference;
  if (r.is_integer()) {
    reference = (wpart * (Rational(1) + x0).pow(-r.numerator().get_si())).to_double();
  } else {
    reference = wpart.to_double() * std::pow((Rational(1) + x0).to_double(), -r.to_double());
  }
  return finish_report(lhs, trunc_i + 1, last_mag, reference, tol);
}

TailReport dobinski_check(const DistSpec& dist, unsigned n, const Rational& x0, int trunc_k,
                          double tol) {
  if (x0 <= Rational(0)) throw std::domain_error("dobinski_check: requires x > 0");
  const double damp = std::exp(-x0.to_double());
  SumMomentSweep sweep(dist, static_cast<int>(n));
  KahanSum lhs;
  Rational xp(1);
  double last_mag = 0.0;
  for (int k = 0; k <= trunc_k; ++k) {
    const Rational term = sweep.moment(n) * xp / factorial(static_cast<unsigned long>(k));
    last_mag = std::abs(term.to_double() * damp);
    lhs.add(term.to_double() * damp);
    xp *= x0;
    sweep.advance();
  }
  const double exact = prob_bell_poly(dist, n).eval(x0).to_double();
  return finish_report(lhs, trunc_k + 1, last_mag, exact, tol);
}

TailReport geometric_mixture_check(const DistSpec& dist, unsigned n, const Rational& x0,
                                   int trunc_i, double tol) {
  if (x0 < Rational(0)) throw std::domain_error("geometric_mixture_check: requires x >= 0");
  const Rational p = Rational(1) / (Rational(1) + x0);
  const Rational q = x0 / (Rational(1) + x0);
  SumMomentSweep sweep(dist, static_cast<int>(n));
  KahanSum lhs;
  Rational qp(1);
  double last_mag = 0.0;
  for (int i = 0; i <= trunc_i; ++i) {
    const Rational term = sweep.moment(n) * p * qp;
    last_mag = std::abs(term.to_double());
    lhs.add(term.to_double());
    qp *= q;
    sweep.advance();
  }
  const double exact = prob_fubini_poly(dist, n).eval(x0).to_double();
  return finish_report(lhs, trunc_i + 1, last_mag, exact, tol);
}

TailReport polylog_limit_check(const DistSpec& dist, unsigned n, const Rational& x0, int trunc,
                               double tol) {
  const auto* geo = dist.get_if<GeometricOnSupport1>();
  if (geo == nullptr)
    throw std::invalid_argument("polylog_limit_check: dist must be geometric");
  const Rational r = geo->r;
  const Rational s = Rational(1) - r;
  if (s.is_zero())
    throw std::domain_error("polylog_limit_check: r = 1 degenerates the convolution");
  if (x0 < Rational(0)) throw std::domain_error("polylog_limit_check: requires x >= 0");

  const Rational p = Rational(1) / (Rational(1) + x0);
  const Rational q = x0 / (Rational(1) + x0);
  const Rational rs = r / s;

  // Row of convolutions Li^{*k}_{-m}(s), m <= n, advanced by one binomial
  // convolution per k.
  std::vector<Rational> li1(n + 1);
  for (unsigned m = 0; m <= n; ++m) li1[m] = polylog_neg(m, s);
  std::vector<Rational> row(n + 1, Rational(0));
  row[0] = Rational(1);  // k = 0: Li^{*0}_{-m} = [m == 0]

  KahanSum main_sum, var_sum;
  Rational qp(1), rsp(1), yp(1);  // q^k, (r/s)^k, (q)^k for the variant (y = q)
  double last_main = 0.0, last_var = 0.0;
  std::vector<double> mags;
  for (int k = 0; k <= trunc; ++k) {
    const Rational conv = row[n];
    const Rational main_term = p * qp * rsp * conv;
    const Rational var_term = rsp * conv * yp;
    last_main = std::abs(main_term.to_double());
    last_var = std::abs(var_term.to_double());
    mags.push_back(std::max(last_main, last_var));
    main_sum.add(main_term.to_double());
    var_sum.add(var_term.to_double());
    qp *= q;
    rsp *= rs;
    yp *= q;  // variant argument x0/(1+x0) equals q
    // row <- binomial convolution with Li_{-*}(s)
    std::vector<Rational> next(n + 1, Rational(0));
    for (unsigned m = 0; m <= n; ++m) {
      Rational acc(0);
      for (unsigned t = 0; t <= m; ++t) acc += binomial(m, t) * row[t] * li1[m - t];
      next[m] = std::move(acc);
    }
    row = std::move(next);
  }
  throw_if_diverging(mags, tol);

  const Rational w = prob_fubini_poly(dist, n).eval(x0);
  const double ref_main = w.to_double();
  const double ref_var = ((Rational(1) + x0) * w).to_double();
  TailReport rep = finish_report(main_sum, trunc + 1, last_main, ref_main, tol);
  rep.last_term_magnitude = std::max(last_main, last_var);
  rep.converged = rep.converged && std::abs(var_sum.value() - ref_var) <= tol && last_var <= tol;
  return rep;
}

bool apostol_euler_check(const Rational& p, const Rational& c, unsigned n, int order) {
  if (p <= Rational(0) || p > Rational(1))
    throw std::domain_error("apostol_euler_check: requires 0 < p <= 1");
  const Rational cp = c * p;
  if (cp > Rational(0) || cp < Rational(-1))
    throw std::domain_error("apostol_euler_check: requires -1 <= cp <= 0");
  if (order < static_cast<int>(n))
    throw std::invalid_argument("apostol_euler_check: order must be >= n");

  // A_j = j![t^j] of 1/(1 + c~(e^t - 1)) with c~ = -cp, via series inversion.
  const Rational ct = -cp;
  std::vector<Rational> u(static_cast<size_t>(order) + 1, ct);
  u[0] = Rational(1);
  const TruncEGF a = egf_inv(TruncEGF(std::move(u)));

  // E_n(c~;x) = sum_j C(n,j) A_{n-j} x^j from the e^{xt} factor.
  std::vector<Rational> lhs(n + 1);
  for (unsigned j = 0; j <= n; ++j) lhs[j] = binomial(n, j) * a.coeff(static_cast<int>(n - j));

  // sum_k C(n,k) W_k^Y(c) x^{n-k} for Y ~ Bernoulli(p).
  const FubiniFamily fam(DistSpec::bernoulli(p), static_cast<int>(n));
  std::vector<Rational> rhs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    rhs[n - k] = binomial(n, k) * fam.poly(static_cast<int>(k)).eval(c);

  const bool poly_equal = RatPoly(std::move(lhs)) == RatPoly(std::move(rhs));
  const bool corollary = a.coeff(static_cast<int>(n)) == fam.poly(static_cast<int>(n)).eval(c);
  return poly_equal && corollary;
}

bool prop31_check(const DistSpec& dist, unsigned k, const Rational& x0, const Rational& v0,
                  int order) {
  if (x0 == Rational(1))
    throw std::domain_error("prop31_check: 1 - x0 E e^{wY} has zero constant term at x0 = 1");
  if (static_cast<int>(k) > order)
    throw std::invalid_argument("prop31_check: k must be <= order");

  const Rational z = x0 / (Rational(1) - x0);
  const FubiniFamily fam(dist, order);

  // Right side: F = 1/(1 - x0 M(w)), k-th derivative, w -> u v0, times u^k/k!.
  const TruncEGF m = mgf_series(dist, order);
  std::vector<Rational> fs(static_cast<size_t>(order) + 1);
  fs[0] = Rational(1) - x0;
  for (int j = 1; j <= order; ++j) fs[static_cast<size_t>(j)] = -x0 * m.coeff(j);
  const TruncEGF dkf = egf_derive(egf_inv(TruncEGF(std::move(fs))), static_cast<int>(k));

  const Rational inv1mx = Rational(1) / (Rational(1) - x0);
  for (int mm = 0; mm <= order; ++mm) {
    Rational lhs(0), rhs(0);
    if (mm >= static_cast<int>(k)) {
      const Rational common = binomial(static_cast<unsigned long>(mm), k) *
                              v0.pow(mm - static_cast<int>(k));
      lhs = inv1mx * common * fam.poly(mm).eval(z);
      rhs = common * dkf.coeff(mm - static_cast<int>(k));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

TailReport prop32_check(const DistSpec& dist, unsigned k, const Rational& x0, int trunc_j,
                        int order, double tol) {
  if (abs(x0) >= Rational(1)) throw std::domain_error("prop32_check: requires |x| < 1");

  const Rational z = x0 / (Rational(1) - x0);
  const FubiniFamily fam(dist, order);

  // Left side coefficients (m >= 1): (1/(1-x0)) E[S_m^k] W_m^Y(z).
  SumMomentSweep sweep(dist, static_cast<int>(k));
  std::vector<Rational> lhs(static_cast<size_t>(order) + 1, Rational(0));
  for (int m = 0; m <= order; ++m) {
    if (m >= 1) lhs[static_cast<size_t>(m)] = sweep.moment(k) * fam.poly(m).eval(z) / (Rational(1) - x0);
    sweep.advance();
  }

  // Right side: sum_j x0^j sum_i S_Y(k,i) y^i D_y^i M(y)^j, truncated in j.
  // y^i D_y^i applied to an EGF leaves coefficient m scaled by (m)_i.
  std::vector<Rational> stir(k + 1);
  for (unsigned i = 0; i <= k; ++i) stir[i] = prob_stirling(fam.moments(), k, i);
  std::vector<Rational> scale(static_cast<size_t>(order) + 1, Rational(0));
  for (int m = 0; m <= order; ++m)
    for (unsigned i = 0; i <= std::min<unsigned>(k, static_cast<unsigned>(m)); ++i)
      scale[static_cast<size_t>(m)] += stir[i] * falling_factorial(static_cast<unsigned long>(m), i);

  const TruncEGF mgf = mgf_series(dist, order);
  TruncEGF power = TruncEGF::one(order);
  std::vector<Rational> rhs(static_cast<size_t>(order) + 1, Rational(0));
  Rational xj(1);
  double last_layer = 0.0;
  for (int j = 0; j <= trunc_j; ++j) {
    last_layer = 0.0;
    for (int m = 0; m <= order; ++m) {
      const Rational contrib = xj * power.coeff(m) * scale[static_cast<size_t>(m)];
      rhs[static_cast<size_t>(m)] += contrib;
      last_layer = std::max(last_layer, std::abs(contrib.to_double()));
    }
    xj *= x0;
    power = egf_mul(power, mgf);
  }

  // The m = 0 coefficient is excluded: the left sum starts at m = 1 while the
  // right side's j-sum contributes 1/(1-x0) there for k = 0.
  double max_diff = 0.0;
  for (int m = 1; m <= order; ++m)
    max_diff = std::max(max_diff,
                        std::abs(lhs[static_cast<size_t>(m)].to_double() -
                                 rhs[static_cast<size_t>(m)].to_double()));

  TailReport rep;
  rep.partial_sum = rhs[static_cast<size_t>(order)].to_double();
  rep.reference = lhs[static_cast<size_t>(order)].to_double();
  rep.terms_used = trunc_j + 1;
  rep.last_term_magnitude = last_layer;
  rep.converged = max_diff <= tol && last_layer <= tol;
  return rep;
}

Estimate mc_fubini(const DistSpec& dist, unsigned n, const Rational& x0, long samples,
                   std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mc_fubini: samples must be >= 1");
  if (x0 < Rational(0)) throw std::domain_error("mc_fubini: requires x >= 0");

  const DistSpec mixing = DistSpec::geometric(Rational(1) / (Rational(1) + x0));
  Rng rng(seed);
  KahanSum sum, sumsq;
  for (long t = 0; t < samples; ++t) {
    const long g = static_cast<long>(sample(mixing, rng));
    double s = 0.0;
    for (long i = 1; i < g; ++i) s += sample(dist, rng);
    double v = 1.0;
    for (unsigned e = 0; e < n; ++e) v *= s;
    sum.add(v);
    sumsq.add(v * v);
  }
  const double mean = sum.value() / static_cast<double>(samples);
  double variance = 0.0;
  if (samples > 1) {
    variance = (sumsq.value() / static_cast<double>(samples) - mean * mean) *
               (static_cast<double>(samples) / static_cast<double>(samples - 1));
    if (variance < 0.0) variance = 0.0;
  }
  Estimate est;
  est.value = mean;
  est.stderr_ = std::sqrt(variance / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

}  // namespace probfubini
