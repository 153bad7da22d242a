#pragma once

/**
 * @file bfile.hpp
 * @brief OEIS b-files: one "<index> <value>" record per line.
 *
 * Four sequences are supported, all with offset 0:
 *   A119326  T(n,k) read by rows
 *   A114213  T(n,k) mod 2 read by rows
 *   A114212  row sums r(n) of the mod-2 triangle
 *   A114214  diagonal sums d(n) of the mod-2 triangle
 */

#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modpascal/continuant.hpp"
#include "modpascal/nat.hpp"
#include "modpascal/triangle.hpp"

namespace modpascal {

enum class SequenceId { A119326, A114213, A114212, A114214 };

inline std::optional<SequenceId> parse_sequence_id(std::string_view s) {
  if (s == "A119326") return SequenceId::A119326;
  if (s == "A114213") return SequenceId::A114213;
  if (s == "A114212") return SequenceId::A114212;
  if (s == "A114214") return SequenceId::A114214;
  return std::nullopt;
}

inline std::string to_string(SequenceId id) {
  switch (id) {
    case SequenceId::A119326: return "A119326";
    case SequenceId::A114213: return "A114213";
    case SequenceId::A114212: return "A114212";
    case SequenceId::A114214: return "A114214";
  }
  return {};
}

inline constexpr Index kDefaultOffset = 0;

struct BFileRecord {
  Index index = 0;
  Nat value;
  std::size_t line = 0;  ///< 1-based source line when parsed, 0 otherwise
};

struct BFile {
  std::string sequence_id;
  Index offset = kDefaultOffset;
  std::vector<BFileRecord> records;
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Position (n, k) of linear index i in a triangle read by rows.
inline std::pair<Index, Index> triangle_position(Index i) {
  require_nonnegative(i, "index");
  auto n = static_cast<Index>((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
  while (n * (n + 1) / 2 > i) --n;
  while ((n + 1) * (n + 2) / 2 <= i) ++n;
  return {n, i - n * (n + 1) / 2};
}

/// Term with index n (offset 0) of the given sequence.
inline Nat sequence_value(SequenceId id, Index n) {
  require_nonnegative(n, "index");
  switch (id) {
    case SequenceId::A119326: {
      auto [row, k] = triangle_position(n);
      return t_exact(row, k);
    }
    case SequenceId::A114213: {
      auto [row, k] = triangle_position(n);
      return Nat(value(t_parity(row, k)));
    }
    case SequenceId::A114212: return row_sum_closed(n);
    case SequenceId::A114214: return d_fast(n);
  }
  return {};
}

/// Records for indices kDefaultOffset..max_index. Triangles are produced a
/// row at a time.
inline BFile generate_bfile(SequenceId id, Index max_index) {
  if (max_index < kDefaultOffset) {
    throw std::domain_error("max index must be at least the offset " +
                            std::to_string(kDefaultOffset));
  }
  BFile file{to_string(id), kDefaultOffset, {}};
  file.records.reserve(static_cast<std::size_t>(max_index - kDefaultOffset + 1));
  if (id == SequenceId::A119326 || id == SequenceId::A114213) {
    Index i = 0;
    for (Index n = 0; i <= max_index; ++n) {
      const TriangleRow row = id == SequenceId::A119326 ? row_exact(n) : row_parity(n);
      for (const Nat& v : row.entries) {
        if (i > max_index) break;
        file.records.push_back({i++, v, 0});
      }
    }
  } else {
    for (Index i = kDefaultOffset; i <= max_index; ++i) {
      file.records.push_back({i, sequence_value(id, i), 0});
    }
  }
  return file;
}

inline void write_bfile(std::ostream& os, const BFile& file) {
  for (const BFileRecord& r : file.records) {
    os << r.index << ' ' << r.value.str() << '\n';
  }
}

/// Reads a b-file. Blank lines, lines starting with '#' and trailing
/// whitespace are ignored. Indices must be consecutive; the first one is
/// taken as the declared offset.
inline BFile parse_bfile(std::istream& is, std::string sequence_id = {}) {
  BFile file{std::move(sequence_id), kDefaultOffset, {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;

    const std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string::npos) {
      throw BFileParseError(line_no, "expected '<index> <value>'");
    }
    std::size_t value_start = line.find_first_not_of(" \t", sep);
    BFileRecord rec;
    rec.line = line_no;
    try {
      const Nat index = parse_decimal(std::string_view(line).substr(0, sep));
      rec.index = to_index(index, "index");
      rec.value = parse_decimal(std::string_view(line).substr(value_start));
    } catch (const std::exception& e) {
      throw BFileParseError(line_no, e.what());
    }
    if (file.records.empty()) {
      file.offset = rec.index;
    } else if (rec.index != file.records.back().index + 1) {
      throw BFileParseError(line_no, "index " + std::to_string(rec.index) +
                                         " does not follow " +
                                         std::to_string(file.records.back().index));
    }
    file.records.push_back(std::move(rec));
  }
  if (file.records.empty()) throw BFileParseError(0, "no records");
  return file;
}

struct BFileMismatch {
  Index index = 0;
  std::size_t line = 0;
  Nat expected;
  Nat found;
};

struct BFileComparison {
  std::size_t compared = 0;
  std::optional<BFileMismatch> first_mismatch;

  bool ok() const { return !first_mismatch; }
};

/// Recomputes each record. A record with index i is compared against our
/// term i - index_offset, so a file using a different OEIS offset can be
/// checked by passing that offset.
inline BFileComparison compare_bfile(SequenceId id, const BFile& file,
                                     Index index_offset = kDefaultOffset) {
  BFileComparison result;
  for (const BFileRecord& r : file.records) {
    const Index n = r.index - index_offset + kDefaultOffset;
    if (n < 0) {
      throw std::domain_error("index " + std::to_string(r.index) +
                              " precedes offset " + std::to_string(index_offset));
    }
    Nat expected = sequence_value(id, n);
    ++result.compared;
    if (expected != r.value) {
      result.first_mismatch = BFileMismatch{r.index, r.line, std::move(expected), r.value};
      break;
    }
  }
  return result;
}

}  // namespace modpascal
