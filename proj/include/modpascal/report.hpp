#pragma once

/**
 * @file report.hpp
 * @brief Tallies of identity checks over index ranges.
 *
 * A check function receives one index n and a Tally, and records any number
 * of (lhs, rhs) comparisons. Ranges may be split across worker threads; the
 * merged result is the same for every worker count because each worker owns
 * a contiguous block and the first counterexample is taken from the lowest
 * block that has one.
 */

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "modpascal/nat.hpp"

namespace modpascal {

struct Counterexample {
  std::string where;  ///< e.g. "n=6" or "n=6, k=3"
  Nat lhs;
  Nat rhs;
};

struct IdentityResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<Counterexample> first_failure;

  std::uint64_t failed() const { return checked - passed; }
  bool ok() const { return checked == passed; }
};

struct VerifyReport {
  std::string suite;
  std::string range;  ///< human readable, e.g. "0..4096"
  std::vector<IdentityResult> identities;

  bool ok() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const IdentityResult& r) { return r.ok(); });
  }
};

class Tally {
 public:
  /// Records one comparison; returns whether it held.
  bool check(const Nat& lhs, const Nat& rhs, const std::string& where) {
    ++checked_;
    if (lhs == rhs) {
      ++passed_;
      return true;
    }
    if (!first_) first_ = Counterexample{where, lhs, rhs};
    return false;
  }

  bool check(const Nat& lhs, const Nat& rhs, std::uint64_t n) {
    ++checked_;
    if (lhs == rhs) {
      ++passed_;
      return true;
    }
    if (!first_) first_ = Counterexample{"n=" + std::to_string(n), lhs, rhs};
    return false;
  }

  std::uint64_t checked() const { return checked_; }
  std::uint64_t passed() const { return passed_; }
  const std::optional<Counterexample>& first() const { return first_; }

  void merge(const Tally& later) {
    checked_ += later.checked_;
    passed_ += later.passed_;
    if (!first_ && later.first_) first_ = later.first_;
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t passed_ = 0;
  std::optional<Counterexample> first_;
};

/// Runs fn(n, tally) for every n in [lo, hi] (inclusive) on `jobs` threads.
/// An empty range (lo > hi) yields zero checks.
template <class Fn>
IdentityResult check_range(std::string name, std::uint64_t lo, std::uint64_t hi,
                           Fn&& fn, unsigned jobs = 1) {
  IdentityResult result{std::move(name), 0, 0, std::nullopt};
  if (lo > hi) return result;
  const std::uint64_t count = hi - lo + 1;
  jobs = std::max(1U, jobs);
  if (jobs > count) jobs = static_cast<unsigned>(count);

  std::vector<Tally> tallies(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto run_block = [&](unsigned w) {
    const std::uint64_t begin = lo + count * w / jobs;
    const std::uint64_t end = lo + count * (w + 1) / jobs;  // exclusive
    try {
      for (std::uint64_t n = begin; n < end; ++n) fn(n, tallies[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(run_block, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Tally total;
  for (const Tally& t : tallies) total.merge(t);
  result.checked = total.checked();
  result.passed = total.passed();
  result.first_failure = total.first();
  return result;
}

inline void print_report(std::ostream& os, const VerifyReport& report) {
  os << "suite " << report.suite << " range " << report.range << ": "
     << (report.ok() ? "PASS" : "FAIL") << '\n';
  for (const IdentityResult& r : report.identities) {
    os << "  " << r.name << ": checked " << r.checked << ", passed " << r.passed
       << ", failed " << r.failed();
    if (r.first_failure) {
      os << "; first counterexample at " << r.first_failure->where
         << ": lhs=" << r.first_failure->lhs << " rhs=" << r.first_failure->rhs;
    }
    os << '\n';
  }
}

}  // namespace modpascal
