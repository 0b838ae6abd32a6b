#include "skewminor/pfaffian.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewminor/det_oracle.hpp"

namespace skewminor {
namespace {

using testing::brute_pf;
using testing::random_skew;
using testing::subsets_of;

Scalar z(long v) { return Scalar::from_int(Ring::integers(), v); }

// Upper triangle, row-major: t12 t13 ... t56.
SkewMatrix fixed_six() {
  const long up[] = {3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, -7, 9};
  SkewMatrix::Builder b(6, Ring::integers());
  int k = 0;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) b.set(i, j, up[k++]);
  }
  return std::move(b).build();
}

TEST(PfMatchsum, Conventions) {
  std::mt19937_64 rng(1);
  const SkewMatrix t = random_skew(5, Ring::integers(), rng);
  EXPECT_EQ(pf_matchsum(t, Word{}), z(1));
  EXPECT_EQ(pf_matchsum(t, Word{2, 4}), t.entry(2, 4));
  EXPECT_EQ(pf_matchsum(t, Word{1, 2, 3}), z(0));
  EXPECT_EQ(pf_matchsum(t, Word{1, 2, 1, 3}), z(0));
  EXPECT_THROW((void)pf_matchsum(t, Word{1, 6}), std::out_of_range);
}

TEST(PfMatchsum, FourLetterFormula) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const SkewMatrix t = random_skew(4, Ring::integers(), rng);
    const Scalar expected = t.entry(1, 2) * t.entry(3, 4) -
                            t.entry(1, 3) * t.entry(2, 4) +
                            t.entry(1, 4) * t.entry(2, 3);
    EXPECT_EQ(brute_pf(t, Word{1, 2, 3, 4}), expected);
    EXPECT_EQ(pf_matchsum(t, Word{1, 2, 3, 4}), expected);
    EXPECT_EQ(pfaffian(t, IndexSet{1, 2, 3, 4}), expected);
  }
}

TEST(PfEvaluators, FrozenSixBySix) {
  const SkewMatrix t = fixed_six();
  const Word all{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(pf_matchsum(t, all), z(328));
  EXPECT_EQ(pf_expand(t, all), z(328));
  EXPECT_EQ(pf_eliminate(t, IndexSet{1, 2, 3, 4, 5, 6}), z(328));
  EXPECT_EQ(pf_expand(t, Word{2, 1, 3, 4, 5, 6}), z(-328));
  EXPECT_EQ(pf_expand(t, Word{6, 3, 1, 4}), z(-40));
  EXPECT_EQ(pf_matchsum(t, Word{6, 3, 1, 4}), z(-40));
}

TEST(PfExpand, Antisymmetry) {
  const SkewMatrix t = fixed_six();
  EXPECT_EQ(pf_expand(t, Word{2, 1}), -t.entry(1, 2));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(2 + 2 * (trial % 3));
    const Word alpha(v);
    std::uniform_int_distribution<std::size_t> pos(0, v.size() - 2);
    const std::size_t p = pos(rng);
    std::swap(v[p], v[p + 1]);
    EXPECT_EQ(pf_expand(t, Word(v)), -pf_expand(t, alpha));
    EXPECT_EQ(pf_expand(t, alpha),
              Scalar::from_int(t.ring(), sign(alpha, sort_word(alpha))) *
                  pf_expand(t, sort_word(alpha)));
  }
}

TEST(PfCache, SharedAcrossWords) {
  const SkewMatrix t = fixed_six();
  PfCache cache;
  EXPECT_EQ(pf_expand(t, Word{1, 2, 3, 4, 5, 6}, cache), z(328));
  const std::size_t filled = cache.size();
  EXPECT_GT(filled, 0u);
  // Every cached entry is the matching-sum value of its key.
  for (const IndexSet& s : subsets_of(6, 4)) {
    const Word w = s.to_word();
    if (const Scalar* hit = cache.find(w.letters())) {
      EXPECT_EQ(*hit, pf_matchsum(t, w)) << w;
    }
  }
  EXPECT_EQ(pf_expand(t, Word{3, 4, 5, 6}, cache), pf_matchsum(t, Word{3, 4, 5, 6}));
  EXPECT_EQ(cache.size(), filled);  // already a sub-result of the full word
}

TEST(PfEliminate, DegenerateAndGuard) {
  const SkewMatrix t = fixed_six();
  EXPECT_EQ(pf_eliminate(t, IndexSet{}), z(1));
  EXPECT_EQ(pf_eliminate(t, IndexSet{1, 2, 5}), z(0));
  EXPECT_THROW((void)pf_eliminate(t, IndexSet{1, 7}), std::out_of_range);
  const SkewMatrix composite(4, Ring::modulo(6));
  EXPECT_THROW((void)pf_eliminate(composite, IndexSet{1, 2}), UnsupportedRing);
  EXPECT_EQ(pf_eliminate(SkewMatrix(4, Ring::modulo(7)), IndexSet{1, 2, 3, 4}),
            Scalar::zero(Ring::modulo(7)));
}

TEST(PfEliminate, NeedsPivotSwaps) {
  // t12 = 0 forces a swap; t13 = t14 = 0 as well forces the last column.
  const SkewMatrix t = SkewMatrix::Builder(4, Ring::integers())
                           .set(1, 4, 2).set(2, 3, 3).set(2, 4, 7).set(3, 4, 1)
                           .build();
  EXPECT_EQ(pf_eliminate(t, IndexSet{1, 2, 3, 4}), brute_pf(t, Word{1, 2, 3, 4}));
  // A zero row makes the Pfaffian vanish.
  const SkewMatrix zero_row =
      SkewMatrix::Builder(4, Ring::integers()).set(2, 3, 5).set(3, 4, 1).build();
  EXPECT_EQ(pf_eliminate(zero_row, IndexSet{1, 2, 3, 4}), z(0));
}

class EvaluatorAgreement : public ::testing::TestWithParam<Ring> {};

TEST_P(EvaluatorAgreement, AllThreeMatchBruteForce) {
  const Ring& ring = GetParam();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    // Sparse entries exercise zero pivots.
    const SkewMatrix t = random_skew(8, ring, rng, trial % 2 ? 1 : 9);
    PfCache cache;
    for (std::size_t k = 0; k <= 8; ++k) {
      for (const IndexSet& s : subsets_of(8, k)) {
        const Word w = s.to_word();
        const Scalar ms = pf_matchsum(t, w);
        ASSERT_EQ(ms, pf_expand(t, w, cache)) << w;
        if (k % 2 == 0 && ring.is_integral_domain()) {
          ASSERT_EQ(ms, pf_eliminate(t, s)) << w;
        }
        if (k <= 6) ASSERT_EQ(ms, brute_pf(t, w)) << w;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, EvaluatorAgreement,
                         ::testing::Values(Ring::integers(), Ring::rationals(),
                                           Ring::modulo(2), Ring::modulo(101),
                                           Ring::modulo(12)));

TEST(Pfaffian, SquareIsPrincipalDeterminant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const SkewMatrix t = random_skew(6, Ring::integers(), rng);
    for (std::size_t k = 0; k <= 6; k += 2) {
      for (const IndexSet& s : subsets_of(6, k)) {
        const Scalar pf = pfaffian(t, s);
        ASSERT_EQ(pf * pf, det_bareiss(submatrix(t, s, s)));
      }
    }
  }
}

TEST(Pfaffian, StrategiesAndParsing) {
  const SkewMatrix t = fixed_six();
  const IndexSet all{1, 2, 3, 4, 5, 6};
  for (PfStrategy s : {PfStrategy::expand, PfStrategy::matchsum, PfStrategy::eliminate}) {
    EXPECT_EQ(pfaffian(t, all, s), z(328)) << to_string(s);
    EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_EQ(pf_word(t, Word{6, 3, 1, 4}, s), z(-40)) << to_string(s);
    EXPECT_EQ(pf_word(t, Word{6, 3, 6, 4}, s), z(0)) << to_string(s);
  }
  EXPECT_EQ(pfaffian(t, IndexSet{2, 5}), t.entry(2, 5));
  EXPECT_EQ(pfaffian(t, IndexSet{}), z(1));
  EXPECT_THROW((void)parse_strategy("fast"), std::invalid_argument);
}

// The repeated-letter rule only matters as a shortcut: without it the
// matching sum still cancels to zero, in every ring including mod 2.
TEST(PfMatchsumUnchecked, RepeatedLettersCancel) {
  std::mt19937_64 rng(9);
  for (const Ring& ring : {Ring::integers(), Ring::modulo(2), Ring::modulo(3)}) {
    const SkewMatrix t = random_skew(5, ring, rng);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> letter(1, 5);
      std::vector<int> v(2 + 2 * (trial % 3));
      for (int& l : v) l = letter(rng);
      const Word w(v);
      if (!w.has_repeats()) {
        EXPECT_EQ(pf_matchsum_unchecked(t, w), pf_matchsum(t, w));
        continue;
      }
      EXPECT_TRUE(pf_matchsum_unchecked(t, w).is_zero()) << w;
    }
  }
}

}  // namespace
}  // namespace skewminor
