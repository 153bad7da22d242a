#pragma once

// Slow reference implementations used only by the tests. None of these
// share code with the kernels they check.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

/// Rows of Pascal's triangle by addition only.
inline std::vector<std::vector<Big>> pascal_rows(std::size_t max_n) {
  std::vector<std::vector<Big>> rows;
  rows.push_back({1});
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Big> row(n + 1);
    row[0] = row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Big binom(const std::vector<std::vector<Big>>& rows, std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// T(n,k) straight from the defining sum with table binomials.
inline Big barry(const std::vector<std::vector<Big>>& rows, std::int64_t n, std::int64_t k) {
  Big sum = 0;
  for (std::int64_t j = 0; j <= n - k; j += 2) sum += binom(rows, k, j) * binom(rows, n - k, j);
  return sum;
}

/// Numerator of the continued fraction [m0; m1, ..., mk] in lowest terms,
/// folded from the tail with explicit rational arithmetic.
template <class Seq>
Big continued_fraction_numerator(const Seq& m) {
  if (m.empty()) return 1;
  Big num = m.back();
  Big den = 1;
  for (auto it = m.rbegin() + 1; it != m.rend(); ++it) {
    // value = a + 1 / (num/den) = (a*num + den) / num
    Big next_num = Big(*it) * num + den;
    den = num;
    num = next_num;
    const Big g = boost::integer::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num;
}

/// Stern's sequence by the defining recurrences, tabulated.
inline std::vector<std::uint64_t> stern_table(std::size_t max_n) {
  std::vector<std::uint64_t> s(max_n + 2, 0);
  if (max_n + 2 > 1) s[1] = 1;
  for (std::size_t n = 2; n < s.size(); ++n) {
    s[n] = n % 2 == 0 ? s[n / 2] : s[n / 2] + s[n / 2 + 1];
  }
  return s;
}

inline std::vector<Big> fibonacci(std::size_t count) {
  std::vector<Big> f(count + 2);
  f[0] = 0;
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

}  // namespace oracle
