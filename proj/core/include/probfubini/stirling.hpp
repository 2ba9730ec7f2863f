#pragma once

// Classical and probabilistic Stirling numbers of the second kind, Lah
// numbers, and partial exponential Bell polynomials.
//
// S_Y(n,k) is computed through the partial-Bell recurrence over the moment
// sequence E[Y], E[Y^2], ... — it stays in non-negative terms for
// non-negative moments. The alternating-sum definition and the EGF
// coefficient route exist as independent oracles in the test suite.

#include <span>
#include <vector>

#include "probfubini/dist.hpp"
#include "probfubini/moments.hpp"
#include "probfubini/rational.hpp"

namespace probfubini {

// Immutable triangular table v[n][k], 0 <= k <= n <= max_n.
class TriTable {
public:
  explicit TriTable(std::vector<std::vector<Rational>> rows);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  const Rational& at(int n, int k) const;
  std::span<const Rational> row(int n) const { return rows_[static_cast<size_t>(n)]; }

private:
  std::vector<std::vector<Rational>> rows_;
};

// S(n,k), by the triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
// Convention: S(n,k) = 0 for k > n. Rows are cached process-wide with
// publish-once semantics.
Rational stirling2(unsigned n, unsigned k);

// Lah number L(n,k) = C(n-1,k-1) n!/k! for k >= 1; L(0,0)=1, L(n,0)=0 for
// n >= 1, L(n,k)=0 for k > n.
Rational lah(unsigned n, unsigned k);

// Partial exponential Bell polynomial B_{n,k}(x_1,...,x_{n-k+1}) by the
// recurrence B_{n,k} = sum_j C(n-1,j-1) x_j B_{n-j,k-1}. The span provides
// x_1.. (element 0 is x_1) and must cover x_1..x_{n-k+1} when k >= 1
// (throws std::invalid_argument when too short). B_{n,k} = 0 for k > n.
Rational bell_partial(std::span<const Rational> x, unsigned n, unsigned k);

// Probabilistic Stirling number S_Y(n,k) = B_{n,k}(E Y, E Y^2, ...).
// Convention S_Y(n,k) = 0 for k > n.
Rational prob_stirling(const DistSpec& dist, unsigned n, unsigned k);
Rational prob_stirling(const MomentProvider& moments, unsigned n, unsigned k);

// Full triangles for table output and the heavier consumers.
TriTable stirling2_table(int max_n);
TriTable prob_stirling_table(const DistSpec& dist, int max_n);
TriTable prob_stirling_table(const MomentProvider& moments, int max_n);

}  // namespace probfubini
