#include "probfubini/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace probfubini {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den) || den == "0")
      throw std::invalid_argument("Rational: denominator must be a positive integer in '" +
                                  std::string(s) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits))
    throw std::invalid_argument("Rational: expected 'num' or 'num/den', got '" + std::string(s) +
                                "'");
  // mpq_set_str rejects a leading '+'; the sign is already validated above.
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: unparseable '" + std::string(s) + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
  mpq_class out = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
  out.canonicalize();
  return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

Rational falling_factorial(unsigned long j, unsigned long k) {
  Rational out(1);
  for (unsigned long t = 0; t < k; ++t) out *= Rational(static_cast<long>(j) - static_cast<long>(t));
  return out;
}

Rational rising_factorial(const Rational& a, unsigned long k) {
  Rational out(1);
  for (unsigned long t = 0; t < k; ++t) out *= a + Rational(static_cast<long>(t));
  return out;
}

Rational binomial_rat(const Rational& a, unsigned long k) {
  Rational out(1);
  for (unsigned long t = 0; t < k; ++t) out *= a - Rational(static_cast<long>(t));
  return out / factorial(k);
}

}  // namespace probfubini
