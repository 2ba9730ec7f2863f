#pragma once

// The distribution catalog: named distributions with exact rational
// parameters. A DistSpec is immutable once constructed and every catalog
// member has all raw moments.

#include <string>
#include <string_view>
#include <variant>

#include "probfubini/rational.hpp"

namespace probfubini {

struct Degenerate {
  Rational c;
};
struct Bernoulli {
  Rational p;  // 0 < p <= 1
};
struct Poisson {
  Rational lambda;  // lambda > 0
};
// Geometric on support {1,2,...}: P{Y=k} = r(1-r)^{k-1}.
struct GeometricOnSupport1 {
  Rational r;  // 0 < r <= 1
};
struct StdExponential {};

class DistSpec {
public:
  using Kind = std::variant<Degenerate, Bernoulli, Poisson, GeometricOnSupport1, StdExponential>;

  static DistSpec degenerate(Rational c);
  static DistSpec bernoulli(Rational p);
  static DistSpec poisson(Rational lambda);
  static DistSpec geometric(Rational r);
  static DistSpec std_exponential();

  // CLI grammar: "degenerate:c" | "bernoulli:p" | "poisson:l" | "geometric:r"
  // | "exponential", rationals written "num/den" or as integers.
  // Throws std::invalid_argument naming the grammar on failure.
  static DistSpec parse(std::string_view s);

  const Kind& kind() const { return kind_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&kind_);
  }

  // Canonical spec string in the parse grammar.
  std::string str() const;

  friend bool operator==(const DistSpec& a, const DistSpec& b) { return a.str() == b.str(); }

private:
  explicit DistSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

}  // namespace probfubini
