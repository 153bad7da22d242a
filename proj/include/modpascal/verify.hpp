#pragma once

/**
 * @file verify.hpp
 * @brief Named cross-check suites over index ranges.
 *
 * Each suite pits two independent evaluation paths against each other for
 * every index up to max_n and reports per-identity counts and the first
 * counterexample.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modpascal/continuant.hpp"
#include "modpascal/nat.hpp"
#include "modpascal/regular.hpp"
#include "modpascal/report.hpp"
#include "modpascal/stern.hpp"
#include "modpascal/triangle.hpp"

namespace modpascal {

inline constexpr std::array<std::string_view, 10> kSuiteNames = {
    "proposition", "thm1",  "thm2",    "eq2",   "eq3",
    "carlitz",     "remark", "lucas",  "glaisher", "lemma"};

namespace detail {

inline std::string range_text(std::uint64_t lo, std::uint64_t hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::string pair_text(std::uint64_t n, std::uint64_t k) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

inline Index as_index(std::uint64_t n) { return static_cast<Index>(n); }

}  // namespace detail

/// T(n,k) mod 2 from the defining sum against the parity reduction.
inline VerifyReport suite_proposition(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"proposition", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "t_exact(n,k) mod 2 = t_parity(n,k)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        const Index ni = detail::as_index(n);
        for (Index k = 0; k <= ni; ++k) {
          const Nat exact_bit = t_exact(ni, k) & 1;
          t.check(exact_bit, Nat(value(t_parity(ni, k))),
                  detail::pair_text(n, static_cast<std::uint64_t>(k)));
        }
      },
      jobs));
  return r;
}

/// d(n) by brute force, by continuant, by recursion and by matrices.
inline VerifyReport suite_thm1(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"thm1", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "d_fast(n) = diag_sum_brute(n)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        t.check(d_fast(n), diag_sum_brute(detail::as_index(n)), n);
      },
      jobs));
  const LinRep rep = derive_linrep();
  r.identities.push_back(check_range(
      "d_recurrence(n) = d_fast(n)", 0, max_n,
      [](std::uint64_t n, Tally& t) { t.check(d_recurrence(n), d_fast(n), n); },
      jobs));
  r.identities.push_back(check_range(
      "linrep_eval(n) = d_fast(n)", 0, max_n,
      [&rep](std::uint64_t n, Tally& t) {
        t.check(linrep_eval(rep, n), d_fast(n), n);
      },
      jobs));
  return r;
}

/// r(n) by summing the parity row against the closed form; n = 0 included.
inline VerifyReport suite_thm2(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"thm2", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "row_sum_brute(n) = row_sum_closed(n)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        t.check(row_sum_brute(detail::as_index(n)), row_sum_closed(n), n);
      },
      jobs));
  return r;
}

inline VerifyReport suite_eq2(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"eq2", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "diag_sum_brute(2n) = diag_sum_brute(2n+1)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        const Index i = detail::as_index(n);
        t.check(diag_sum_brute(2 * i), diag_sum_brute(2 * i + 1), n);
      },
      jobs));
  return r;
}

inline VerifyReport suite_eq3(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"eq3", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "d_fast(2n) = d_fast(2n+1)", 0, max_n,
      [](std::uint64_t n, Tally& t) { t.check(d_fast(2 * n), d_fast(2 * n + 1), n); },
      jobs));
  r.identities.push_back(check_range(
      "d_fast(2n+1) = stern(2n+1)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        t.check(d_fast(2 * n + 1), stern(2 * n + 1), n);
      },
      jobs));
  return r;
}

inline VerifyReport suite_carlitz(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"carlitz", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "carlitz_sum(n) = stern(n+1)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        t.check(carlitz_sum(detail::as_index(n)), stern(n + 1), n);
      },
      jobs));
  return r;
}

/// Bitwise binomial parity against exact binomials C(n,k) mod 2. The exact
/// row is built with the multiplicative formula, independent of Lucas.
inline VerifyReport suite_lucas(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"lucas", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "binom_parity(n,k) = C(n,k) mod 2", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        Nat c = 1;
        for (std::uint64_t k = 0; k <= n; ++k) {
          const Nat exact_bit = c & 1;
          t.check(Nat(value(binom_parity(detail::as_index(n), detail::as_index(k)))),
                  exact_bit, detail::pair_text(n, k));
          c *= n - k;
          c /= k + 1;
        }
      },
      jobs));
  return r;
}

inline VerifyReport suite_glaisher(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"glaisher", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "sum_k binom_parity(n,k) = 2^s2(n)", 0, max_n,
      [](std::uint64_t n, Tally& t) {
        std::uint64_t odd = 0;
        const Index ni = detail::as_index(n);
        for (Index k = 0; k <= ni; ++k) odd += value(binom_parity(ni, k));
        t.check(Nat(odd), pow2(popcount(n)), n);
      },
      jobs));
  return r;
}

/// For even n, the continuant of the runs of n equals that of n+1.
inline VerifyReport suite_lemma(std::uint64_t max_n, unsigned jobs = 1) {
  VerifyReport r{"lemma", detail::range_text(0, max_n), {}};
  r.identities.push_back(check_range(
      "K(runs(n)) = K(runs(n+1)), n even", 0, max_n / 2,
      [](std::uint64_t half, Tally& t) {
        const std::uint64_t n = 2 * half;
        t.check(continuant(run_lengths(n)), continuant(run_lengths(n + 1)), n);
      },
      jobs));
  return r;
}

/// Runs one suite by name, or every suite for "all". Unknown names yield
/// std::nullopt.
inline std::optional<std::vector<VerifyReport>> run_suite(std::string_view name,
                                                          std::uint64_t max_n,
                                                          unsigned jobs = 1) {
  auto one = [&](std::string_view s) -> std::optional<VerifyReport> {
    if (s == "proposition") return suite_proposition(max_n, jobs);
    if (s == "thm1") return suite_thm1(max_n, jobs);
    if (s == "thm2") return suite_thm2(max_n, jobs);
    if (s == "eq2") return suite_eq2(max_n, jobs);
    if (s == "eq3") return suite_eq3(max_n, jobs);
    if (s == "carlitz") return suite_carlitz(max_n, jobs);
    if (s == "remark") return verify_remark(max_n, jobs);
    if (s == "lucas") return suite_lucas(max_n, jobs);
    if (s == "glaisher") return suite_glaisher(max_n, jobs);
    if (s == "lemma") return suite_lemma(max_n, jobs);
    return std::nullopt;
  };

  std::vector<VerifyReport> reports;
  if (name == "all") {
    for (std::string_view s : kSuiteNames) reports.push_back(*one(s));
    return reports;
  }
  auto report = one(name);
  if (!report) return std::nullopt;
  reports.push_back(std::move(*report));
  return reports;
}

}  // namespace modpascal
