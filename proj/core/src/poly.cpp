#include "probfubini/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace probfubini {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Rational(0));
  trim();
}

void RatPoly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::constant(Rational v) { return RatPoly({std::move(v)}); }

RatPoly RatPoly::monomial(Rational coeff, int k) {
  if (k < 0) throw std::invalid_argument("RatPoly: negative exponent");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[static_cast<size_t>(k)] = std::move(coeff);
  return RatPoly(std::move(c));
}

const Rational& RatPoly::coeff(int k) const {
  static const Rational kZero(0);
  if (k < 0 || k > degree()) return kZero;
  return c_[static_cast<size_t>(k)];
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<size_t>(k)];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() == 0) return RatPoly();
  std::vector<Rational> c(static_cast<size_t>(degree()));
  for (int k = 1; k <= degree(); ++k)
    c[static_cast<size_t>(k - 1)] = Rational(k) * c_[static_cast<size_t>(k)];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::scale_arg(const Rational& s) const {
  std::vector<Rational> c(c_.size());
  Rational p(1);
  for (size_t k = 0; k < c_.size(); ++k) {
    c[k] = c_[k] * p;
    p *= s;
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1, Rational(0));
  for (int k = 0; k < static_cast<int>(c.size()); ++k)
    c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree()) + 1, Rational(0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& p) {
  std::vector<Rational> c(p.c_.size());
  for (size_t k = 0; k < p.c_.size(); ++k) c[k] = s * p.c_[k];
  return RatPoly(std::move(c));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& a = c_[static_cast<size_t>(k)];
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() > 0 ? " + " : " - ");
    }
    const Rational mag = abs(a);
    if (k == 0) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << mag.str() << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace probfubini
