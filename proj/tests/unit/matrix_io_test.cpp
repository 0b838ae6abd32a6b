#include "skewminor/matrix_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

namespace skewminor {
namespace {

SkewMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_skew_matrix(in);
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(MatrixIo, ReadsCommentsAndSparseEntries) {
  const SkewMatrix t = parse(
      "# header comment\n"
      "\n"
      "skew 4 int\n"
      "  # indented comment\n"
      "1 2 7\n"
      "2 4 -3\n");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.entry(2, 1), Scalar::from_int(Ring::integers(), -7));
  EXPECT_EQ(t.entry(4, 2), Scalar::from_int(Ring::integers(), 3));
  EXPECT_TRUE(t.entry(1, 3).is_zero());
}

TEST(MatrixIo, RingsInHeader) {
  EXPECT_EQ(parse("skew 2 rat\n1 2 -3/6\n").entry(1, 2),
            Scalar::parse(Ring::rationals(), "-1/2"));
  const SkewMatrix t = parse("skew 2 mod 7\n1 2 10\n");
  EXPECT_EQ(t.ring(), Ring::modulo(7));
  EXPECT_EQ(t.entry(1, 2), Scalar::from_int(Ring::modulo(7), 3));
  EXPECT_EQ(parse("skew 0 int\n").size(), 0u);
}

TEST(MatrixIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("skew 3 int\n1 2 1\n1 2 4\n"), 3u);    // duplicate
  EXPECT_EQ(error_line("skew 3 int\n2 1 1\n"), 2u);           // i > j
  EXPECT_EQ(error_line("skew 3 int\n1 4 1\n"), 2u);           // range
  EXPECT_EQ(error_line("# c\nskew 3 real\n"), 2u);            // ring
  EXPECT_EQ(error_line("matrix 3 int\n"), 1u);                // header
  EXPECT_EQ(error_line("skew 3 int\n1 2\n"), 2u);             // no value
  EXPECT_EQ(error_line("skew 3 int\n\n1 2 x\n"), 3u);         // bad value
  EXPECT_EQ(error_line("skew 3 mod 5\n1 2 1 mod 7\n"), 2u);   // modulus
  EXPECT_EQ(error_line(""), 0u);
}

TEST(MatrixIo, WriteReadRoundTrip) {
  std::mt19937_64 rng(5);
  for (const Ring& ring : {Ring::integers(), Ring::modulo(11)}) {
    const SkewMatrix t = testing::random_skew(7, ring, rng);
    std::stringstream buf;
    write_skew_matrix(buf, t);
    EXPECT_EQ(read_skew_matrix(buf), t);
  }
  const SkewMatrix q = parse("skew 3 rat\n1 3 5/7\n2 3 -1/2\n");
  std::stringstream buf;
  write_skew_matrix(buf, q);
  EXPECT_EQ(buf.str(), "skew 3 rat\n1 3 5/7\n2 3 -1/2\n");
}

}  // namespace
}  // namespace skewminor
