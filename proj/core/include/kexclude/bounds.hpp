#pragma once

// Closed-form bounds on n(k) and the parameter derivation of the
// polynomial excluder. All arithmetic is exact; rounding happens only
// through explicit ceil/floor.

#include "kexclude/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace kex {

struct FloorCheck {
  std::size_t j = 0;
  std::int64_t kj = 0;
  Rational floor;  // (1 - 2/(j+1)) k
  bool holds = false;
};

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  /// kj[i] holds k_{i+2}, each rounded up before feeding the next step.
  std::vector<std::int64_t> kj;
  /// 2(k + k_m) - m^2.
  std::int64_t implied_n_lower = 0;
  /// ceil((4 - 5/m) k); meaningful when k >= m^3.
  std::int64_t theorem1_lower = 0;
  std::vector<FloorCheck> floors;
  /// n <= 4k - 3m, the regime in which every floor check must hold.
  bool floor_regime = false;

  std::int64_t k_at(std::size_t j) const { return kj.at(j - 2); }
};

/// Thrown when a denominator n - k - k_j becomes non-positive: the chain
/// itself then proves n too small for a k-enabling graph.
class BoundDivergence : public std::runtime_error {
 public:
  BoundDivergence(const std::string& what, std::size_t j, BoundReport partial)
      : std::runtime_error(what), j_(j), partial_(std::move(partial)) {}
  std::size_t step() const { return j_; }
  const BoundReport& partial() const { return partial_; }

 private:
  std::size_t j_;
  BoundReport partial_;
};

/// k_2 = ceil(k(k-1)/(n-k)), k_{j+1} = ceil((k+k_j)(k-j)/(n-k-k_j)).
/// Requires n > k >= 1 and m >= 2.
BoundReport kj_sequence(std::int64_t n, std::int64_t k, std::int64_t m);

/// sum |I_i| + sum |C_i| - m^2 with m the (common) list length.
std::int64_t msystem_size_lower(std::span<const std::int64_t> sizes_i,
                                std::span<const std::int64_t> sizes_c);

/// ceil((4 - 5/m) k). Requires m >= 2 and k >= m^3.
std::int64_t theorem1_lower(std::int64_t k, std::int64_t m);

/// (2 - 2/(j+1)) k exactly, and its ceiling (the least admissible c_j).
Rational cj_floor_exact(std::int64_t j, std::int64_t k);
std::int64_t cj_floor(std::int64_t j, std::int64_t k);

struct ExcluderParams {
  Rational delta;
  std::int64_t m = 0;
  Rational eps;           // 1 / (m(m+1))
  std::int64_t k_min = 0; // (m+1)^2
};

/// m = largest integer < 8/delta - 1. Accepts 0 < delta <= 1; rejects any
/// delta giving m < 2.
ExcluderParams derive_params(const Rational& delta);

}  // namespace kex
