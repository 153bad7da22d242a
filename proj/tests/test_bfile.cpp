#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "modpascal/bfile.hpp"

using namespace modpascal;

namespace {

std::string serialize(const BFile& f) {
  std::ostringstream os;
  write_bfile(os, f);
  return os.str();
}

BFile parse(const std::string& text) {
  std::istringstream is(text);
  return parse_bfile(is);
}

}  // namespace

TEST(SequenceIds, ParseAndName) {
  for (auto id : {SequenceId::A119326, SequenceId::A114213, SequenceId::A114212,
                  SequenceId::A114214}) {
    EXPECT_EQ(parse_sequence_id(to_string(id)), id);
  }
  EXPECT_FALSE(parse_sequence_id("A000045").has_value());
}

TEST(TrianglePosition, ReadByRows) {
  Index i = 0;
  for (Index n = 0; n < 300; ++n) {
    for (Index k = 0; k <= n; ++k, ++i) {
      ASSERT_EQ(triangle_position(i), std::make_pair(n, k)) << i;
    }
  }
}

TEST(Generate, Examples) {
  EXPECT_EQ(serialize(generate_bfile(SequenceId::A114214, 3)), "0 1\n1 1\n2 2\n3 2\n");
  EXPECT_EQ(serialize(generate_bfile(SequenceId::A114212, 0)), "0 1\n");
  EXPECT_EQ(serialize(generate_bfile(SequenceId::A114213, 2)), "0 1\n1 1\n2 1\n");
  // rows 0..4 of the exact triangle: 15 entries, index 12 is T(4,2) = 2
  const BFile tri = generate_bfile(SequenceId::A119326, 14);
  ASSERT_EQ(tri.records.size(), 15U);
  EXPECT_EQ(tri.records[12].value, 2);
  EXPECT_THROW(generate_bfile(SequenceId::A114214, -1), std::domain_error);
}

TEST(Generate, MatchesSequenceValue) {
  for (auto id : {SequenceId::A119326, SequenceId::A114213, SequenceId::A114212,
                  SequenceId::A114214}) {
    const BFile f = generate_bfile(id, 500);
    ASSERT_EQ(f.records.size(), 501U);
    for (const auto& r : f.records) ASSERT_EQ(r.value, sequence_value(id, r.index));
  }
}

TEST(Parse, RoundTripAndDeterminism) {
  for (auto id : {SequenceId::A119326, SequenceId::A114213, SequenceId::A114212,
                  SequenceId::A114214}) {
    const std::string text = serialize(generate_bfile(id, 2000));
    EXPECT_EQ(text, serialize(generate_bfile(id, 2000)));
    const BFile back = parse(text);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(back.offset, 0);
    const auto cmp = compare_bfile(id, back);
    EXPECT_TRUE(cmp.ok());
    EXPECT_EQ(cmp.compared, 2001U);
  }
}

TEST(Parse, ToleratesCommentsBlankLinesAndTrailingWhitespace) {
  const BFile f = parse("# A114214\n# comment\n0 1  \n1\t1\r\n\n2 2\n");
  ASSERT_EQ(f.records.size(), 3U);
  EXPECT_EQ(f.records[2].value, 2);
  EXPECT_EQ(f.records[2].line, 6U);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse(""), BFileParseError);
  EXPECT_THROW(parse("# only comments\n"), BFileParseError);
  try {
    parse("");
  } catch (const BFileParseError& e) {
    EXPECT_STREQ(e.what(), "no records");
  }
  try {
    parse("0 1\n1 1\nfoo bar\n");
    FAIL();
  } catch (const BFileParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  try {
    parse("0 1\n2 2\n");
    FAIL();
  } catch (const BFileParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW(parse("0\n"), BFileParseError);
  EXPECT_THROW(parse("0 0x10\n"), BFileParseError);
}

TEST(Compare, CorruptedValueIsReported) {
  std::string text = serialize(generate_bfile(SequenceId::A114214, 20));
  // line 5 is "4 3"; make it "4 30"
  const auto pos = text.find("4 3\n");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, "4 30\n");
  const auto cmp = compare_bfile(SequenceId::A114214, parse(text));
  ASSERT_FALSE(cmp.ok());
  EXPECT_EQ(cmp.first_mismatch->index, 4);
  EXPECT_EQ(cmp.first_mismatch->line, 5U);
  EXPECT_EQ(cmp.first_mismatch->expected, 3);
  EXPECT_EQ(cmp.first_mismatch->found, 30);
}

TEST(Compare, DeclaredOffset) {
  // same terms, numbered from 1
  const BFile shifted = parse("1 1\n2 1\n3 2\n4 2\n5 3\n");
  EXPECT_EQ(shifted.offset, 1);
  EXPECT_FALSE(compare_bfile(SequenceId::A114214, shifted).ok());
  EXPECT_TRUE(compare_bfile(SequenceId::A114214, shifted, 1).ok());
  EXPECT_THROW(compare_bfile(SequenceId::A114214, shifted, 2), std::domain_error);
}
