#include "probfubini/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace probfubini {

TriTable::TriTable(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (size_t n = 0; n < rows_.size(); ++n)
    if (rows_[n].size() != n + 1) throw std::invalid_argument("TriTable: row n must have n+1 entries");
}

const Rational& TriTable::at(int n, int k) const {
  if (n < 0 || n > max_n() || k < 0 || k > n)
    throw std::invalid_argument("TriTable: index out of range");
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

namespace {

// Process-wide classical Stirling cache; rows only ever grow and entries are
// immutable once written.
std::mutex g_stirling_mu;
std::vector<std::vector<Rational>> g_stirling_rows;  // g_stirling_rows[n][k]

void extend_stirling_rows_locked(unsigned n) {
  if (g_stirling_rows.empty()) g_stirling_rows.push_back({Rational(1)});
  while (g_stirling_rows.size() <= n) {
    const auto& prev = g_stirling_rows.back();
    const size_t m = g_stirling_rows.size();
    std::vector<Rational> row(m + 1, Rational(0));
    for (size_t k = 1; k <= m; ++k) {
      row[k] = Rational(static_cast<long>(k)) * (k < prev.size() ? prev[k] : Rational(0)) +
               prev[k - 1];
    }
    g_stirling_rows.push_back(std::move(row));
  }
}

}  // namespace

Rational stirling2(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  std::lock_guard<std::mutex> lock(g_stirling_mu);
  extend_stirling_rows_locked(n);
  return g_stirling_rows[n][k];
}

Rational lah(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

namespace {

// Full lower triangle B_{m,i} for 0 <= i <= m <= n_max; needs x_1..x_{n_max}.
std::vector<std::vector<Rational>> bell_triangle_full(std::span<const Rational> x, unsigned n_max) {
  std::vector<std::vector<Rational>> b(n_max + 1, std::vector<Rational>(n_max + 1, Rational(0)));
  b[0][0] = Rational(1);
  for (unsigned m = 1; m <= n_max; ++m) {
    for (unsigned i = 1; i <= m; ++i) {
      Rational acc(0);
      for (unsigned j = 1; j <= m - i + 1; ++j)
        acc += binomial(m - 1, j - 1) * x[j - 1] * b[m - j][i - 1];
      b[m][i] = std::move(acc);
    }
  }
  return b;
}

}  // namespace

Rational bell_partial(std::span<const Rational> x, unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  if (x.size() < n - k + 1)
    throw std::invalid_argument("bell_partial: sequence must provide x_1..x_{n-k+1}");
  // Banded DP: the target only depends on entries B_{m,i} with m - i <= n - k,
  // which keeps every x access inside x_1..x_{n-k+1}. b[i][d] holds B_{i+d,i}.
  const unsigned width = n - k;
  std::vector<std::vector<Rational>> b(k + 1, std::vector<Rational>(width + 1, Rational(0)));
  b[0][0] = Rational(1);
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned d = 0; d <= width; ++d) {
      const unsigned m = i + d;
      Rational acc(0);
      for (unsigned j = 1; j <= d + 1; ++j)
        acc += binomial(m - 1, j - 1) * x[j - 1] * b[i - 1][d - j + 1];
      b[i][d] = std::move(acc);
    }
  }
  return b[k][width];
}

Rational prob_stirling(const DistSpec& dist, unsigned n, unsigned k) {
  return prob_stirling(MomentProvider(dist), n, k);
}

Rational prob_stirling(const MomentProvider& moments, unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  std::vector<Rational> m(n - k + 1);
  for (unsigned j = 1; j <= n - k + 1; ++j) m[j - 1] = moments.get(j);
  return bell_partial(m, n, k);
}

TriTable stirling2_table(int max_n) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Rational> row(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      row[static_cast<size_t>(k)] = stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k));
    rows.push_back(std::move(row));
  }
  return TriTable(std::move(rows));
}

TriTable prob_stirling_table(const DistSpec& dist, int max_n) {
  return prob_stirling_table(MomentProvider(dist), max_n);
}

TriTable prob_stirling_table(const MomentProvider& moments, int max_n) {
  std::vector<Rational> m(static_cast<size_t>(max_n > 0 ? max_n : 1));
  for (int j = 1; j <= std::max(max_n, 1); ++j)
    m[static_cast<size_t>(j - 1)] = moments.get(static_cast<unsigned>(j));
  const auto b = bell_triangle_full(m, static_cast<unsigned>(max_n));
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Rational> row(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) row[static_cast<size_t>(k)] = b[static_cast<size_t>(n)][static_cast<size_t>(k)];
    rows.push_back(std::move(row));
  }
  return TriTable(std::move(rows));
}

}  // namespace probfubini
