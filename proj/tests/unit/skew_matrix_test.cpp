#include "skewminor/skew_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace skewminor {
namespace {

using testing::paper_example;
using testing::random_skew;
using testing::subsets_of;

Scalar z(long v) { return Scalar::from_int(Ring::integers(), v); }

TEST(SkewMatrix, EntryConventions) {
  const SkewMatrix t = SkewMatrix::Builder(4, Ring::integers()).set(1, 2, 5).build();
  EXPECT_EQ(t.entry(1, 1), z(0));
  EXPECT_EQ(t.entry(1, 2), z(5));
  EXPECT_EQ(t.entry(2, 1), z(-5));
  EXPECT_EQ(t.entry(3, 4), z(0));
  EXPECT_THROW((void)t.entry(0, 1), std::out_of_range);
  EXPECT_THROW((void)t.entry(1, 5), std::out_of_range);
}

TEST(SkewMatrix, BuilderBelowDiagonalStoresNegation) {
  const SkewMatrix t = SkewMatrix::Builder(3, Ring::integers()).set(3, 1, 4).build();
  EXPECT_EQ(t.entry(1, 3), z(-4));
  EXPECT_EQ(t.entry(3, 1), z(4));
}

TEST(SkewMatrix, BuilderRejectsBadEntries) {
  SkewMatrix::Builder b(3, Ring::integers());
  EXPECT_THROW(b.set(2, 2, 1), std::invalid_argument);
  EXPECT_THROW(b.set(1, 4, 1), std::out_of_range);
  EXPECT_THROW(b.set(1, 2, Scalar::one(Ring::rationals())), RingMismatch);
}

TEST(IndexSet, SortsAndRejectsDuplicates) {
  EXPECT_EQ(IndexSet::from({3, 1, 2}).indices(), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW((void)IndexSet::from({1, 2, 1}), std::invalid_argument);
  EXPECT_THROW((void)IndexSet::from({0, 2}), std::invalid_argument);
  EXPECT_TRUE(IndexSet{}.empty());
}

TEST(Lifts, Examples) {
  EXPECT_EQ(odd_lift(IndexSet{1, 2}), (IndexSet{1, 3}));
  EXPECT_EQ(even_lift(IndexSet{2, 3}), (IndexSet{4, 6}));
  EXPECT_EQ(odd_lift(IndexSet{}), IndexSet{});
}

TEST(Submatrix, PaperExample) {
  const SkewMatrix t = paper_example(2, 3, 5);
  const GeneralMatrix m = submatrix(t, IndexSet{1, 2}, IndexSet{2, 3});
  EXPECT_EQ(m, GeneralMatrix::from_rows({{z(2), z(3)}, {z(0), z(5)}}));
  const GeneralMatrix empty = submatrix(t, {}, {});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 0u);
  EXPECT_THROW((void)submatrix(t, IndexSet{1, 4}, IndexSet{1, 2}),
               std::out_of_range);
}

TEST(Submatrix, PrincipalIsSkew) {
  std::mt19937_64 rng(3);
  const SkewMatrix t = random_skew(6, Ring::integers(), rng);
  const GeneralMatrix m = submatrix(t, IndexSet{1, 3, 4, 6}, IndexSet{1, 3, 4, 6});
  for (std::size_t a = 0; a < 4; ++a) {
    EXPECT_TRUE(m.at(a, a).is_zero());
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(m.at(a, b), -m.at(b, a));
  }
}

TEST(Doubled, PaperSixBySix) {
  const SkewMatrix tp = doubled(paper_example(2, 3, 5));
  ASSERT_EQ(tp.size(), 6u);
  const std::vector<std::vector<long>> expected = {
      {0, 0, 2, 2, 3, 3},     {0, 0, 2, 2, 3, 3},     {-2, -2, 0, 0, 5, 5},
      {-2, -2, 0, 0, 5, 5},   {-3, -3, -5, -5, 0, 0}, {-3, -3, -5, -5, 0, 0}};
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      EXPECT_EQ(tp.entry(a, b), z(expected[a - 1][b - 1])) << a << "," << b;
    }
  }
  EXPECT_EQ(submatrix(paper_example(2, 3, 5), IndexSet{1, 2}, IndexSet{2, 3}),
            submatrix(tp, IndexSet{1, 3}, IndexSet{4, 6}));
  EXPECT_EQ(doubled(SkewMatrix()).size(), 0u);
}

TEST(Doubled, IsSkewAndLiftsSubmatrices) {
  std::mt19937_64 rng(11);
  for (const Ring& ring : {Ring::integers(), Ring::modulo(2), Ring::rationals()}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const SkewMatrix t = random_skew(n, ring, rng);
      const SkewMatrix tp = doubled(t);
      for (int a = 1; a <= static_cast<int>(2 * n); ++a) {
        for (int b = 1; b <= static_cast<int>(2 * n); ++b) {
          ASSERT_TRUE((tp.entry(a, b) + tp.entry(b, a)).is_zero());
          ASSERT_EQ(tp.entry(a, b), t.entry((a + 1) / 2, (b + 1) / 2));
        }
      }
      for (std::size_t m = 0; m <= n; ++m) {
        for (const IndexSet& r : subsets_of(n, m)) {
          for (const IndexSet& s : subsets_of(n, m)) {
            ASSERT_EQ(submatrix(t, r, s),
                      submatrix(tp, odd_lift(r), even_lift(s)));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace skewminor
