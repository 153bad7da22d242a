#pragma once

/**
 * @file continuant.hpp
 * @brief Binary run lengths and continuants.
 *
 * The continuant K(m_0,...,m_k) is the numerator of [m_0; m_1, ..., m_k]:
 *
 *   K() = 1,  K(m_0) = m_0,  K(m_0..m_j) = m_j K(m_0..m_{j-1}) + K(m_0..m_{j-2}).
 *
 * d_fast(n) evaluates the diagonal sum d(n) as the continuant of the MSB-first
 * run lengths of n, in O(log n) big-integer steps.
 */

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modpascal/nat.hpp"

namespace modpascal {

/// Lengths of the maximal blocks of equal binary digits, most significant
/// block first. The first block is always a block of 1s; blocks alternate.
/// n = 0 has no digits and therefore no runs.
struct RunLengths {
  std::vector<std::uint64_t> lengths;
  bool source_even = true;  ///< the trailing block is a block of 0s

  bool operator==(const RunLengths&) const = default;
};

template <BitIndexable T>
RunLengths run_lengths(const T& n) {
  require_nonnegative(n, "n");
  RunLengths runs;
  runs.source_even = !test_bit(n, 0);
  const std::size_t width = bit_length(n);
  if (width == 0) return runs;
  bool current = true;
  std::uint64_t length = 0;
  for (std::size_t i = width; i-- > 0;) {
    const bool b = test_bit(n, i);
    if (b == current) {
      ++length;
    } else {
      runs.lengths.push_back(length);
      current = b;
      length = 1;
    }
  }
  runs.lengths.push_back(length);
  return runs;
}

/// Inverse of run_lengths: alternating 1-runs and 0-runs, MSB first.
inline Nat from_run_lengths(std::span<const std::uint64_t> lengths) {
  Nat n = 0;
  bool one = true;
  for (std::uint64_t len : lengths) {
    if (len == 0) throw std::domain_error("run length must be positive");
    n <<= static_cast<unsigned>(len);
    if (one) n += pow2(len) - 1;
    one = !one;
  }
  return n;
}

/// K(m_0,...,m_k) with two rolling accumulators. Every entry must be >= 1.
template <std::integral T>
Nat continuant(std::span<const T> m) {
  Nat before = 1;  // K of the prefix one shorter (K() for the base step)
  Nat current = 1; // K of the empty prefix
  bool first = true;
  for (const T& q : m) {
    if (q <= 0) {
      throw std::domain_error("continuant entries must be positive, got " +
                              std::to_string(q));
    }
    if (first) {
      current = Nat(q);
      first = false;
      continue;
    }
    Nat next = current * static_cast<std::uint64_t>(q);
    next += before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

template <std::integral T>
Nat continuant(const std::vector<T>& m) {
  return continuant(std::span<const T>(m));
}

inline Nat continuant(const RunLengths& runs) {
  return continuant(std::span<const std::uint64_t>(runs.lengths));
}

/// Diagonal sum d(n) as the continuant of the run lengths of n.
template <BitIndexable T>
Nat d_fast(const T& n) {
  require_nonnegative(n, "n");
  return continuant(run_lengths(n));
}

/// Comma-separated decimal form, e.g. "3,4,5". Empty sequence is "".
inline std::string format_run_lengths(std::span<const std::uint64_t> m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

/// Parses "3,4,5". Entries must be positive decimal integers.
inline std::vector<std::uint64_t> parse_run_lengths(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    const Nat v = parse_decimal(field);
    if (v <= 0 || v > Nat(std::numeric_limits<std::uint64_t>::max())) {
      throw std::invalid_argument("run length must be a positive 64-bit "
                                  "integer, got '" + std::string(field) + "'");
    }
    out.push_back(static_cast<std::uint64_t>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace modpascal
