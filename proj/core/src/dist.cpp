#include "probfubini/dist.hpp"

#include <stdexcept>

namespace probfubini {

namespace {

constexpr const char* kGrammar =
    "expected 'degenerate:c' | 'bernoulli:p' | 'poisson:l' | 'geometric:r' | 'exponential' "
    "with rationals written 'num/den' or integers";

}  // namespace

DistSpec DistSpec::degenerate(Rational c) { return DistSpec(Degenerate{std::move(c)}); }

DistSpec DistSpec::bernoulli(Rational p) {
  if (p <= Rational(0) || p > Rational(1))
    throw std::invalid_argument("bernoulli: requires 0 < p <= 1");
  return DistSpec(Bernoulli{std::move(p)});
}

DistSpec DistSpec::poisson(Rational lambda) {
  if (lambda <= Rational(0)) throw std::invalid_argument("poisson: requires lambda > 0");
  return DistSpec(Poisson{std::move(lambda)});
}

DistSpec DistSpec::geometric(Rational r) {
  if (r <= Rational(0) || r > Rational(1))
    throw std::invalid_argument("geometric: requires 0 < r <= 1");
  return DistSpec(GeometricOnSupport1{std::move(r)});
}

DistSpec DistSpec::std_exponential() { return DistSpec(StdExponential{}); }

DistSpec DistSpec::parse(std::string_view s) {
  if (s == "exponential") return std_exponential();
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("unparseable distribution '" + std::string(s) + "': " + kGrammar);
  const std::string_view name = s.substr(0, colon);
  Rational param;
  try {
    param = Rational::parse(s.substr(colon + 1));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unparseable distribution '" + std::string(s) + "': " + kGrammar);
  }
  if (name == "degenerate") return degenerate(param);
  if (name == "bernoulli") return bernoulli(param);
  if (name == "poisson") return poisson(param);
  if (name == "geometric") return geometric(param);
  throw std::invalid_argument("unparseable distribution '" + std::string(s) + "': " + kGrammar);
}

std::string DistSpec::str() const {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Degenerate>) return "degenerate:" + d.c.str();
        if constexpr (std::is_same_v<T, Bernoulli>) return "bernoulli:" + d.p.str();
        if constexpr (std::is_same_v<T, Poisson>) return "poisson:" + d.lambda.str();
        if constexpr (std::is_same_v<T, GeometricOnSupport1>) return "geometric:" + d.r.str();
        return "exponential";
      },
      kind_);
}

}  // namespace probfubini
