#pragma once

/**
 * @file nat.hpp
 * @brief Arbitrary-precision integers and the bit-level helpers shared by
 *        every sequence kernel.
 *
 * Values of the triangle, the diagonal and row sums, Stern's sequence and
 * continuants all grow without bound, so they are carried as Nat. Indices
 * that feed O(log n) kernels may also be Nat; indices that feed O(n) brute
 * force kernels are plain 64-bit integers.
 */

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace modpascal {

/// Unbounded integer. Sequence values are nonnegative; matrix entries of a
/// linear representation may be negative, so the type itself is signed.
using Nat = boost::multiprecision::cpp_int;

/// Index type for the brute-force kernels. Signed so that a negative
/// argument can be reported as a domain error instead of wrapping.
using Index = std::int64_t;

/// Anything a logarithmic kernel can scan bit by bit.
template <class T>
concept BitIndexable =
    (std::integral<T> && !std::same_as<T, bool>) || std::same_as<T, Nat>;

template <BitIndexable T>
constexpr bool is_negative(const T& n) {
  if constexpr (std::same_as<T, Nat>) {
    return n.sign() < 0;
  } else if constexpr (std::is_signed_v<T>) {
    return n < 0;
  } else {
    return false;
  }
}

/// Throws std::domain_error("<what> must be nonnegative") for n < 0.
template <BitIndexable T>
void require_nonnegative(const T& n, std::string_view what) {
  if (is_negative(n)) {
    throw std::domain_error(std::string(what) + " must be nonnegative");
  }
}

/// Number of binary digits of n (0 for n == 0). Requires n >= 0.
template <BitIndexable T>
std::size_t bit_length(const T& n) {
  if constexpr (std::same_as<T, Nat>) {
    if (n.is_zero()) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
  } else {
    using U = std::make_unsigned_t<T>;
    return static_cast<std::size_t>(std::bit_width(static_cast<U>(n)));
  }
}

/// Binary digit i of n (i = 0 is the least significant). Requires n >= 0.
template <BitIndexable T>
bool test_bit(const T& n, std::size_t i) {
  if constexpr (std::same_as<T, Nat>) {
    return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
  } else {
    using U = std::make_unsigned_t<T>;
    if (i >= sizeof(U) * 8) return false;
    return ((static_cast<U>(n) >> i) & 1U) != 0;
  }
}

/// Binary sum of digits s_2(n). Requires n >= 0.
template <BitIndexable T>
std::size_t popcount(const T& n) {
  if constexpr (std::same_as<T, Nat>) {
    std::size_t count = 0;
    for (auto limb = n.backend().limbs(), end = limb + n.backend().size();
         limb != end; ++limb) {
      count += static_cast<std::size_t>(std::popcount(*limb));
    }
    return count;
  } else {
    using U = std::make_unsigned_t<T>;
    return static_cast<std::size_t>(std::popcount(static_cast<U>(n)));
  }
}

/// 2^e as a Nat.
inline Nat pow2(std::size_t e) {
  Nat r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// Strict decimal parse: optional '-', then one or more digits, nothing else.
/// Throws std::invalid_argument on anything else (no hex, no whitespace).
inline Nat parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) {
    throw std::invalid_argument("expected a decimal integer, got '" +
                                std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected a decimal integer, got '" +
                                  std::string(text) + "'");
    }
  }
  // cpp_int would read a leading 0 as octal.
  std::size_t lead = 0;
  while (lead + 1 < digits.size() && digits[lead] == '0') ++lead;
  Nat value(std::string(digits.substr(lead)));
  return text.front() == '-' ? Nat(-value) : value;
}

inline std::string to_decimal(const Nat& n) { return n.str(); }

/// Narrowing conversion for brute-force paths; throws if n does not fit.
inline Index to_index(const Nat& n, std::string_view what) {
  if (n < Nat(std::numeric_limits<Index>::min()) ||
      n > Nat(std::numeric_limits<Index>::max())) {
    throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<Index>(n);
}

}  // namespace modpascal
