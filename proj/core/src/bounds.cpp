#include "kexclude/bounds.hpp"

#include <string>

namespace kex {

BoundReport kj_sequence(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n <= k) throw std::invalid_argument("kj_sequence requires n > k");
  if (m < 2) throw std::invalid_argument("kj_sequence requires m >= 2");

  BoundReport r;
  r.n = n;
  r.k = k;
  r.m = m;
  r.floor_regime = n <= 4 * k - 3 * m;

  std::int64_t current = ceil_of(Rational(k * (k - 1), n - k));
  r.kj.push_back(current);
  for (std::int64_t j = 2; j < m; ++j) {
    const std::int64_t denom = n - k - current;
    if (denom <= 0)
      throw BoundDivergence("denominator n - k - k_" + std::to_string(j) + " = " +
                                std::to_string(denom) + " is not positive",
                            static_cast<std::size_t>(j), r);
    current = ceil_of(Rational((k + current) * (k - j), denom));
    r.kj.push_back(current);
  }

  for (std::size_t i = 0; i < r.kj.size(); ++i) {
    const auto j = static_cast<std::int64_t>(i + 2);
    FloorCheck f;
    f.j = static_cast<std::size_t>(j);
    f.kj = r.kj[i];
    f.floor = (1 - Rational(2, j + 1)) * k;
    f.holds = Rational(f.kj) >= f.floor;
    r.floors.push_back(f);
  }
  r.implied_n_lower = 2 * (k + r.kj.back()) - m * m;
  r.theorem1_lower = ceil_of((4 - Rational(5, m)) * k);
  return r;
}

std::int64_t msystem_size_lower(std::span<const std::int64_t> sizes_i,
                                std::span<const std::int64_t> sizes_c) {
  if (sizes_i.size() != sizes_c.size())
    throw std::invalid_argument("an m-system has as many independent sets as cliques");
  const auto m = static_cast<std::int64_t>(sizes_i.size());
  std::int64_t total = 0;
  for (std::int64_t s : sizes_i) total += s;
  for (std::int64_t s : sizes_c) total += s;
  return total - m * m;
}

std::int64_t theorem1_lower(std::int64_t k, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("theorem1_lower requires m >= 2");
  if (k < m * m * m)
    throw std::invalid_argument("theorem1_lower requires k >= m^3 = " +
                                std::to_string(m * m * m) + ", got k = " + std::to_string(k));
  return ceil_of((4 - Rational(5, m)) * k);
}

Rational cj_floor_exact(std::int64_t j, std::int64_t k) {
  if (j < 1) throw std::invalid_argument("cj_floor requires j >= 1");
  return (2 - Rational(2, j + 1)) * k;
}

std::int64_t cj_floor(std::int64_t j, std::int64_t k) { return ceil_of(cj_floor_exact(j, k)); }

ExcluderParams derive_params(const Rational& delta) {
  if (delta <= 0 || delta > 1)
    throw std::invalid_argument("delta must satisfy 0 < delta <= 1, got " + to_string(delta));
  const Rational limit = Rational(8) / delta - 1;
  // Largest integer strictly below limit.
  const std::int64_t m = ceil_of(limit) - 1;
  if (m < 2)
    throw std::invalid_argument("delta = " + to_string(delta) + " gives m = " +
                                std::to_string(m) + " < 2");
  ExcluderParams p;
  p.delta = delta;
  p.m = m;
  p.eps = Rational(1, m * (m + 1));
  p.k_min = (m + 1) * (m + 1);
  return p;
}

}  // namespace kex
