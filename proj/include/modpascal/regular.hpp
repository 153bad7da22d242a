#pragma once

/**
 * @file regular.hpp
 * @brief The diagonal sums d(n) as a 2-regular sequence.
 *
 * d satisfies, for every n >= 0,
 *
 *   d(2n+1) = d(2n)
 *   d(4n+2) = 3 d(2n) - d(4n)
 *   d(8n)   = -d(2n) + 2 d(4n)
 *   d(8n+4) = 4 d(2n) - d(4n)
 *
 * Three evaluators live here: a memoized recursion driven only by these
 * identities, a 2x2 matrix linear representation read bit by bit, and an
 * audit that checks all four identities against the continuant evaluator.
 */

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modpascal/continuant.hpp"
#include "modpascal/mat2.hpp"
#include "modpascal/nat.hpp"
#include "modpascal/report.hpp"

namespace modpascal {

/// Linear representation of d over the state v(n) = (d(2n), d(4n)):
///
///   v(0) = initial,  v(2n) = m0 v(n),  v(2n+1) = m1 v(n),
///   d(n) = v(floor(n / 2))[readout].
struct LinRep {
  Vec2 initial;
  Mat2 m0;
  Mat2 m1;
  std::size_t readout = 0;

  bool operator==(const LinRep&) const = default;
};

/// From the identities:
///   v(2n)   = (d(4n),   d(8n))   = (d(4n), -d(2n) + 2 d(4n))
///   v(2n+1) = (d(4n+2), d(8n+4)) = (3 d(2n) - d(4n), 4 d(2n) - d(4n))
inline LinRep derive_linrep() {
  return LinRep{
      Vec2{{1, 1}},
      Mat2{{{{0, 1}, {-1, 2}}}},
      Mat2{{{{3, -1}, {4, -1}}}},
      0,
  };
}

/// v(n): one matrix-vector product per binary digit of n, MSB first.
template <BitIndexable T>
Vec2 linrep_state(const LinRep& rep, const T& n) {
  require_nonnegative(n, "n");
  Vec2 v = rep.initial;
  for (std::size_t i = bit_length(n); i-- > 0;) {
    v = (test_bit(n, i) ? rep.m1 : rep.m0) * v;
  }
  return v;
}

template <BitIndexable T>
Nat linrep_eval(const LinRep& rep, const T& n) {
  require_nonnegative(n, "n");
  if constexpr (std::same_as<T, Nat>) {
    return linrep_state(rep, Nat(n >> 1))[rep.readout];
  } else {
    return linrep_state(rep, static_cast<T>(n / 2))[rep.readout];
  }
}

/// Thrown when the recursion reaches an index that neither an identity nor
/// a base value covers.
class RecurrenceConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// d(n) from the four identities plus a finite set of base values taken
/// from d_fast. Memoizes into the instance; not safe to share across
/// threads without external locking. One instance per thread is fine.
class DiagonalRecurrence {
 public:
  explicit DiagonalRecurrence(const std::vector<Nat>& base_indices = {0, 2, 4}) {
    for (const Nat& i : base_indices) {
      require_nonnegative(i, "base index");
      memo_.emplace(i, d_fast(i));
    }
  }

  Nat operator()(const Nat& n) {
    require_nonnegative(n, "n");
    return eval(n);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Nat eval(const Nat& n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;

    Nat result;
    const unsigned low3 = static_cast<unsigned>(n & 7);
    if (low3 & 1U) {
      result = eval(Nat(n - 1));                      // d(2m+1) = d(2m)
    } else if (low3 == 2 || low3 == 6) {
      const Nat m = n >> 2;                           // n = 4m + 2
      result = 3 * eval(Nat(2 * m)) - eval(Nat(4 * m));
    } else {
      const Nat m = n >> 3;                           // n = 8m or 8m + 4
      if (m.is_zero() && low3 == 0) {
        throw RecurrenceConsistencyError(
            "d(0) is not reachable from the identities; add it as a base value");
      }
      const Nat d2 = eval(Nat(2 * m));
      const Nat d4 = eval(Nat(4 * m));
      result = low3 == 0 ? Nat(2 * d4 - d2) : Nat(4 * d2 - d4);
    }
    if (result.sign() < 0) {
      throw RecurrenceConsistencyError("negative value for d(" + n.str() + ")");
    }
    memo_.emplace(n, result);
    return result;
  }

  std::map<Nat, Nat> memo_;
};

template <BitIndexable T>
Nat d_recurrence(const T& n) {
  require_nonnegative(n, "n");
  DiagonalRecurrence rec;
  return rec(Nat(n));
}

/// Checks the four identities against d_fast for every n whose left-hand
/// index is at most max_n. Failures are recorded, never thrown.
inline VerifyReport verify_remark(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport report{"remark", "0.." + std::to_string(max_n), {}};
  auto d = [](std::uint64_t i) { return d_fast(i); };

  report.identities.push_back(check_range(
      "d(2n+1) = d(2n)", 0, max_n >= 1 ? (max_n - 1) / 2 : 0,
      [&](std::uint64_t n, Tally& t) {
        if (2 * n + 1 <= max_n) t.check(d(2 * n + 1), d(2 * n), n);
      },
      jobs));
  report.identities.push_back(check_range(
      "d(4n+2) = 3d(2n) - d(4n)", 0, max_n / 4,
      [&](std::uint64_t n, Tally& t) {
        if (4 * n + 2 <= max_n) t.check(d(4 * n + 2), 3 * d(2 * n) - d(4 * n), n);
      },
      jobs));
  report.identities.push_back(check_range(
      "d(8n) = -d(2n) + 2d(4n)", 0, max_n / 8,
      [&](std::uint64_t n, Tally& t) {
        t.check(d(8 * n), -d(2 * n) + 2 * d(4 * n), n);
      },
      jobs));
  report.identities.push_back(check_range(
      "d(8n+4) = 4d(2n) - d(4n)", 0, max_n / 8,
      [&](std::uint64_t n, Tally& t) {
        if (8 * n + 4 <= max_n) t.check(d(8 * n + 4), 4 * d(2 * n) - d(4 * n), n);
      },
      jobs));
  return report;
}

}  // namespace modpascal
