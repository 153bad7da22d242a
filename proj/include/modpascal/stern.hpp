#pragma once

/**
 * @file stern.hpp
 * @brief Stern's diatomic sequence and Carlitz's binomial parity sum.
 *
 * s(0) = 0, s(1) = 1, s(2n) = s(n), s(2n+1) = s(n) + s(n+1).
 *
 * stern() scans n from the most significant bit keeping the row vector
 * (s(m), s(m+1)) for the prefix m read so far. Appending a 0 multiplies on
 * the right by R = [[1,1],[0,1]], appending a 1 by L = [[1,0],[1,1]]; these
 * are the Stern-Brocot generators.
 */

#include <cstdint>

#include "modpascal/mat2.hpp"
#include "modpascal/nat.hpp"
#include "modpascal/triangle.hpp"

namespace modpascal {

inline Mat2 stern_brocot_left() { return Mat2{{{{1, 0}, {1, 1}}}}; }
inline Mat2 stern_brocot_right() { return Mat2{{{{1, 1}, {0, 1}}}}; }

template <BitIndexable T>
Nat stern(const T& n) {
  require_nonnegative(n, "n");
  Nat lo = 0;  // s(m)
  Nat hi = 1;  // s(m+1)
  for (std::size_t i = bit_length(n); i-- > 0;) {
    if (test_bit(n, i)) {
      lo += hi;  // (s(2m+1), s(2m+2)) = (s(m)+s(m+1), s(m+1))
    } else {
      hi += lo;  // (s(2m), s(2m+1)) = (s(m), s(m)+s(m+1))
    }
  }
  return lo;
}

/// sum_{k <= n/2} (C(n-k,k) mod 2); equals s(n+1).
inline Nat carlitz_sum(Index n) {
  require_nonnegative(n, "n");
  std::uint64_t sum = 0;
  for (Index k = 0; k <= n / 2; ++k) sum += value(binom_parity(n - k, k));
  return Nat(sum);
}

}  // namespace modpascal
