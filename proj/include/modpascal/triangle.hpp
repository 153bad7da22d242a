#pragma once

/**
 * @file triangle.hpp
 * @brief Barry's modified Pascal triangle
 *
 *   T(n,k) = sum_{0 <= j <= n-k, j even} C(k,j) * C(n-k,j),   0 <= k <= n,
 *
 * exactly and mod 2, together with its row sums r(n) and diagonal sums d(n)
 * of the mod-2 triangle, and the binary (Lucas) parity kernels for ordinary
 * binomial coefficients.
 *
 * The mod-2 entry never evaluates the defining sum: for n+k even,
 * T(n,k) = C(n,k) (mod 2), otherwise T(n,k) = C(n-1,k) (mod 2).
 *
 * All functions are pure. Rows are produced one at a time; nothing here
 * materializes the whole triangle.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "modpascal/nat.hpp"

namespace modpascal {

/// A single binary digit.
enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit to_bit(bool b) { return b ? Bit::one : Bit::zero; }
constexpr unsigned value(Bit b) { return static_cast<unsigned>(b); }

enum class RowMode { exact, parity };

/// Row n of the triangle, entries k = 0..n.
struct TriangleRow {
  Index n = 0;
  RowMode mode = RowMode::exact;
  std::vector<Nat> entries;
};

namespace detail {

inline void require_entry(Index n, Index k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  if (k > n) {
    throw std::domain_error("k must not exceed n (k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace detail

/// Exact T(n,k) by the defining sum.
///
/// The summand C(k,j)*C(n-k,j) is carried from one j to the next by the
/// exact step  term *= (k-j)(n-k-j) / (j+1)^2, so no factorials are formed.
inline Nat t_exact(Index n, Index k) {
  detail::require_entry(n, k);
  const Index a = k;
  const Index b = n - k;
  const Index top = a < b ? a : b;  // C(a,j) C(b,j) vanishes beyond min(a,b)
  Nat term = 1;
  Nat sum = 1;
  for (Index j = 0; j < top; ++j) {
    term *= static_cast<std::uint64_t>(a - j);
    term *= static_cast<std::uint64_t>(b - j);
    term /= static_cast<std::uint64_t>(j + 1);
    term /= static_cast<std::uint64_t>(j + 1);
    if ((j + 1) % 2 == 0) sum += term;
  }
  return sum;
}

/// C(n,k) mod 2 via Lucas: odd iff every binary digit of k is <= the
/// corresponding digit of n. k > n gives 0.
inline Bit binom_parity(Index n, Index k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  if (k > n) return Bit::zero;
  return to_bit((k & n) == k);
}

/// Digit-wise minimum of the binary expansions, i.e. bitwise AND.
inline Index digit_and(Index n, Index k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  return n & k;
}

/// T(n,k) mod 2 through the parity reduction to ordinary binomials.
inline Bit t_parity(Index n, Index k) {
  detail::require_entry(n, k);
  if ((n + k) % 2 == 0) return binom_parity(n, k);
  return binom_parity(n - 1, k);
}

inline TriangleRow row_exact(Index n) {
  require_nonnegative(n, "n");
  TriangleRow row{n, RowMode::exact, {}};
  row.entries.reserve(static_cast<std::size_t>(n) + 1);
  for (Index k = 0; k <= n; ++k) row.entries.push_back(t_exact(n, k));
  return row;
}

inline TriangleRow row_parity(Index n) {
  require_nonnegative(n, "n");
  TriangleRow row{n, RowMode::parity, {}};
  row.entries.reserve(static_cast<std::size_t>(n) + 1);
  for (Index k = 0; k <= n; ++k) row.entries.emplace_back(value(t_parity(n, k)));
  return row;
}

/// r(n) = sum_k (T(n,k) mod 2), by summing the parity row.
inline Nat row_sum_brute(Index n) {
  require_nonnegative(n, "n");
  std::uint64_t sum = 0;
  for (Index k = 0; k <= n; ++k) sum += value(t_parity(n, k));
  return Nat(sum);
}

/// r(n) in O(log n):
///   n odd        -> 2^{s_2(n)}
///   n even, >= 2 -> 2^{s_2(n)} + 2^{s_2(n-2)}
///   n = 0        -> 1 (the single entry T(0,0))
template <BitIndexable T>
Nat row_sum_closed(const T& n) {
  require_nonnegative(n, "n");
  if (n == 0) return Nat(1);
  if (test_bit(n, 0)) return pow2(popcount(n));
  const T prev = n - 2;
  return pow2(popcount(n)) + pow2(popcount(prev));
}

/// d(n) = sum_{k <= n/2} (T(n-k,k) mod 2). O(n) parity tests.
inline Nat diag_sum_brute(Index n) {
  require_nonnegative(n, "n");
  std::uint64_t sum = 0;
  for (Index k = 0; k <= n / 2; ++k) sum += value(t_parity(n - k, k));
  return Nat(sum);
}

}  // namespace modpascal
