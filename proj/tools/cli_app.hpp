#pragma once

/**
 * @file cli_app.hpp
 * @brief The modpascal command-line front end.
 *
 * Subcommands: triangle, seq, bfile, bfile-compare, verify, bench, plus the
 * small helpers runs and continuant. Exit codes: 0 success, 1 a verification
 * counterexample or b-file mismatch, 2 usage error, 3 I/O or data error.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "modpascal/modpascal.hpp"

namespace modpascal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Brute-force bench targets refuse n beyond this; they are O(n).
inline constexpr Index kBruteBenchLimit = Index{1} << 26;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  Nat first;
  Nat last;
};

/// "A..B" (inclusive) or a single "A".
inline Range parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
      r.first = r.last = parse_decimal(text);
    } else {
      r.first = parse_decimal(std::string_view(text).substr(0, dots));
      r.last = parse_decimal(std::string_view(text).substr(dots + 2));
    }
    if (r.first.sign() < 0) throw UsageError("range must be nonnegative");
    if (r.first > r.last) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad range '" + text + "': " + e.what());
  }
}

namespace detail {

inline Index small_index(const Nat& n) {
  try {
    return to_index(n, "index");
  } catch (const std::out_of_range&) {
    throw UsageError("index " + n.str() + " is too large for this method");
  }
}

inline void emit_row(std::ostream& out, const TriangleRow& row) {
  for (std::size_t k = 0; k < row.entries.size(); ++k) {
    if (k) out << ' ';
    out << row.entries[k];
  }
}

/// Uniformly random integer with exactly `bits` binary digits.
inline Nat random_with_bits(std::size_t bits, std::mt19937_64& rng) {
  if (bits == 0) return 0;
  std::vector<std::uint64_t> words((bits + 63) / 64);
  for (auto& w : words) w = rng();
  Nat n;
  boost::multiprecision::import_bits(n, words.rbegin(), words.rend(), 64);
  n >>= static_cast<unsigned>(words.size() * 64 - bits);
  boost::multiprecision::bit_set(n, static_cast<unsigned>(bits - 1));
  return n;
}

template <class Fn>
double median_seconds(Fn&& fn, unsigned reps) {
  std::vector<double> times;
  times.reserve(reps);
  for (unsigned i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_triangle(std::ostream& out, Index rows, const std::string& mode) {
  if (rows < 1) throw UsageError("--rows must be at least 1");
  if (mode != "exact" && mode != "parity") {
    throw UsageError("--mode must be exact or parity");
  }
  for (Index n = 0; n < rows; ++n) {
    detail::emit_row(out, mode == "exact" ? row_exact(n) : row_parity(n));
    out << '\n';
  }
  return kExitOk;
}

inline int cmd_seq(std::ostream& out, const std::string& which,
                   const std::string& range_text, std::string method,
                   const std::string& mode) {
  const Range range = parse_range(range_text);
  auto bad_pair = [&] {
    return UsageError("method '" + method + "' is not available for '" + which + "'");
  };

  if (which == "d") {
    if (method.empty()) method = "fast";
    if (method != "brute" && method != "fast" && method != "recurrence") throw bad_pair();
    DiagonalRecurrence recurrence;
    for (Nat n = range.first; n <= range.last; ++n) {
      Nat v;
      if (method == "brute") v = diag_sum_brute(detail::small_index(n));
      else if (method == "fast") v = d_fast(n);
      else v = recurrence(n);
      out << n << ' ' << v << '\n';
    }
  } else if (which == "r") {
    if (method.empty()) method = "closed";
    if (method != "brute" && method != "closed") throw bad_pair();
    for (Nat n = range.first; n <= range.last; ++n) {
      const Nat v = method == "brute" ? row_sum_brute(detail::small_index(n))
                                      : row_sum_closed(n);
      out << n << ' ' << v << '\n';
    }
  } else if (which == "stern") {
    if (method.empty()) method = "fast";
    if (method != "fast" && method != "carlitz") throw bad_pair();
    for (Nat n = range.first; n <= range.last; ++n) {
      Nat v;
      if (method == "fast") v = stern(n);
      else v = n.is_zero() ? Nat(0) : carlitz_sum(detail::small_index(n) - 1);
      out << n << ' ' << v << '\n';
    }
  } else if (which == "t-row") {
    if (mode != "exact" && mode != "parity") {
      throw UsageError("--mode must be exact or parity");
    }
    if (method.empty()) method = mode == "exact" ? "brute" : "fast";
    if (method != "brute" && method != "fast") throw bad_pair();
    if (mode == "exact" && method != "brute") {
      throw UsageError("exact rows are only available with --method brute");
    }
    const Index lo = detail::small_index(range.first);
    const Index hi = detail::small_index(range.last);
    for (Index n = lo; n <= hi; ++n) {
      TriangleRow row;
      if (mode == "exact") {
        row = row_exact(n);
      } else if (method == "fast") {
        row = row_parity(n);
      } else {
        row = row_exact(n);
        for (Nat& e : row.entries) e &= 1;
        row.mode = RowMode::parity;
      }
      out << n << ' ';
      detail::emit_row(out, row);
      out << '\n';
    }
  } else {
    throw UsageError("unknown sequence '" + which + "' (expected d, r, stern or t-row)");
  }
  return kExitOk;
}

inline SequenceId require_sequence(const std::string& id) {
  const auto seq = parse_sequence_id(id);
  if (!seq) {
    throw UsageError("unknown sequence id '" + id +
                     "' (expected A119326, A114213, A114212 or A114214)");
  }
  return *seq;
}

inline int cmd_bfile(std::ostream& out, const std::string& id, Index max_index,
                     const std::string& out_path) {
  const SequenceId seq = require_sequence(id);
  if (max_index < kDefaultOffset) {
    throw UsageError("--max must be at least " + std::to_string(kDefaultOffset));
  }
  const BFile file = generate_bfile(seq, max_index);
  if (out_path.empty() || out_path == "-") {
    write_bfile(out, file);
    return kExitOk;
  }
  std::ofstream os(out_path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + out_path + "' for writing");
  write_bfile(os, file);
  os.flush();
  if (!os) throw IoError("write failed for '" + out_path + "'");
  return kExitOk;
}

inline int cmd_bfile_compare(std::ostream& out, const std::string& id,
                             const std::string& path, Index offset) {
  const SequenceId seq = require_sequence(id);
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "' for reading");
  BFile file;
  try {
    file = parse_bfile(is, id);
  } catch (const BFileParseError& e) {
    throw IoError(path + ": " + e.what());
  }
  BFileComparison cmp;
  try {
    cmp = compare_bfile(seq, file, offset);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (cmp.ok()) {
    out << id << ": " << cmp.compared << " records agree (indices "
        << file.records.front().index << ".." << file.records.back().index << ")\n";
    return kExitOk;
  }
  const BFileMismatch& m = *cmp.first_mismatch;
  out << id << ": mismatch at index " << m.index << " (line " << m.line
      << "): expected " << m.expected << ", found " << m.found << '\n';
  return kExitCounterexample;
}

inline int cmd_verify(std::ostream& out, const std::string& suite,
                      std::uint64_t max_n, unsigned jobs) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  const auto reports = run_suite(suite, max_n, jobs);
  if (!reports) throw UsageError("unknown suite '" + suite + "'");
  bool ok = true;
  for (const VerifyReport& r : *reports) {
    print_report(out, r);
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitCounterexample;
}

inline int cmd_bench(std::ostream& out, std::ostream& err, const std::string& target,
                     const std::vector<std::string>& sizes, bool bits,
                     unsigned reps, std::uint64_t seed) {
  static const std::vector<std::string> targets = {
      "d-fast", "d-brute", "stern", "rowsum-closed", "rowsum-brute"};
  if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
    throw UsageError("unknown bench target '" + target + "'");
  }
  if (sizes.empty()) throw UsageError("--sizes is required");
  if (reps < 1) throw UsageError("--reps must be at least 1");

  std::mt19937_64 rng(seed);
  out << "target\tsize\tbits\tmedian_s\treps\n";
  for (const std::string& size_text : sizes) {
    Nat n;
    try {
      const Nat size = parse_decimal(size_text);
      if (size.sign() <= 0) throw UsageError("sizes must be positive");
      n = bits ? detail::random_with_bits(static_cast<std::size_t>(size), rng) : size;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    const bool brute = target == "d-brute" || target == "rowsum-brute";
    if (brute && n > Nat(kBruteBenchLimit)) {
      err << "warning: " << target << " is O(n); refusing n with "
          << bit_length(n) << " bits (limit 2^26)\n";
      out << target << '\t' << size_text << '\t' << bit_length(n) << "\trefused\t0\n";
      continue;
    }

    Nat sink;
    double t = 0;
    if (target == "d-fast") t = detail::median_seconds([&] { sink = d_fast(n); }, reps);
    else if (target == "stern") t = detail::median_seconds([&] { sink = stern(n); }, reps);
    else if (target == "rowsum-closed")
      t = detail::median_seconds([&] { sink = row_sum_closed(n); }, reps);
    else {
      const Index i = static_cast<Index>(n);
      if (target == "d-brute") t = detail::median_seconds([&] { sink = diag_sum_brute(i); }, reps);
      else t = detail::median_seconds([&] { sink = row_sum_brute(i); }, reps);
    }
    std::ostringstream secs;
    secs << std::scientific << std::setprecision(3) << t;
    out << target << '\t' << size_text << '\t' << bit_length(n) << '\t'
        << secs.str() << '\t' << reps << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

/// Parses args (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Barry's modified Pascal triangle, its parity structure, "
               "continuants and Stern's diatomic sequence"};
  app.name("modpascal");
  app.require_subcommand(1);

  Index rows = 0;
  std::string mode = "exact";
  auto* triangle = app.add_subcommand("triangle", "print the first rows of the triangle");
  triangle->add_option("--rows,-n", rows, "number of rows (>= 1)")->required();
  triangle->add_option("--mode", mode, "exact | parity");

  std::string which, range_text, method, seq_mode = "parity";
  auto* seq = app.add_subcommand("seq", "stream '<n> <value>' lines for a sequence");
  seq->add_option("sequence", which, "d | r | stern | t-row")->required();
  seq->add_option("range", range_text, "A..B (inclusive) or a single A")->required();
  seq->add_option("--method,-m", method,
                  "d: brute|fast|recurrence; r: brute|closed; stern: fast|carlitz; "
                  "t-row: brute|fast");
  seq->add_option("--mode", seq_mode, "t-row only: exact | parity");

  std::string seq_id, out_path;
  Index max_index = 0;
  auto* bfile = app.add_subcommand("bfile", "write an OEIS b-file");
  bfile->add_option("sequence", seq_id, "A119326 | A114213 | A114212 | A114214")->required();
  bfile->add_option("--max", max_index, "largest index to write")->required();
  bfile->add_option("--out,-o", out_path, "output path (stdout if omitted)");

  std::string cmp_id, cmp_path;
  Index cmp_offset = kDefaultOffset;
  auto* compare = app.add_subcommand("bfile-compare", "check a b-file against recomputed terms");
  compare->add_option("sequence", cmp_id, "A119326 | A114213 | A114212 | A114214")->required();
  compare->add_option("path", cmp_path, "b-file to check")->required();
  compare->add_option("--offset", cmp_offset, "index of our term 0 in the file");

  std::string suite;
  std::uint64_t max_n = 4096;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "run cross-check suites");
  verify->add_option("suite", suite,
                     "all | proposition | thm1 | thm2 | eq2 | eq3 | carlitz | remark | "
                     "lucas | glaisher | lemma")
      ->required();
  verify->add_option("--max-n", max_n, "largest index to check");
  verify->add_option("--jobs,-j", jobs, "worker threads");

  std::string target;
  std::vector<std::string> sizes;
  bool bits = false;
  unsigned reps = 5;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "time fast and brute-force evaluators");
  bench->add_option("target", target,
                    "d-fast | d-brute | stern | rowsum-closed | rowsum-brute")
      ->required();
  bench->add_option("--sizes", sizes, "comma-separated sizes")->delimiter(',')->required();
  bench->add_flag("--bits", bits, "sizes are bit lengths of random inputs");
  bench->add_option("--reps", reps, "repetitions per size (median reported)");
  bench->add_option("--seed", seed, "seed for random inputs");

  std::string runs_n;
  auto* runs = app.add_subcommand("runs", "print the MSB-first binary run lengths of n");
  runs->add_option("n", runs_n, "nonnegative decimal integer")->required();

  std::string cont_list;
  auto* cont = app.add_subcommand("continuant", "continuant of a comma-separated list");
  cont->add_option("list", cont_list, "e.g. 3,4,5 (empty string for ())")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*triangle) return cmd_triangle(out, rows, mode);
    if (*seq) return cmd_seq(out, which, range_text, method, seq_mode);
    if (*bfile) return cmd_bfile(out, seq_id, max_index, out_path);
    if (*compare) return cmd_bfile_compare(out, cmp_id, cmp_path, cmp_offset);
    if (*verify) return cmd_verify(out, suite, max_n, jobs);
    if (*bench) return cmd_bench(out, err, target, sizes, bits, reps, seed);
    if (*runs) {
      Nat n;
      try {
        n = parse_decimal(runs_n);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (n.sign() < 0) throw UsageError("n must be nonnegative");
      out << format_run_lengths(run_lengths(n).lengths) << '\n';
      return kExitOk;
    }
    if (*cont) {
      std::vector<std::uint64_t> m;
      try {
        m = parse_run_lengths(cont_list);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << continuant(m) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace modpascal::cli
