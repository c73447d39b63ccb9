#include <gtest/gtest.h>

#include <random>

#include "multicut/consecutive.hpp"
#include "multicut/errors.hpp"
#include "multicut/kofn.hpp"
#include "multicut/lcm_filtration.hpp"
#include "multicut/oracle.hpp"
#include "test_support.hpp"

namespace multicut {
namespace {

using testing::Word;

TEST(LcmFold, SeriesSystemTopLevel) {
  MonomialIdeal series = kofn_ideal(1, 3);
  MonomialIdeal top = lcm_fold(series, 3);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top.generator(0), SquarefreeMonomial::from_indices(3, {1, 2, 3}));
}

TEST(LcmFold, PairsOfTwoOutOfEightGiveAllTriples) {
  MonomialIdeal level = lcm_fold(kofn_ideal(2, 8), 2);
  EXPECT_EQ(level.size(), 56u);
  for (Word s : level.supports()) EXPECT_EQ(std::popcount(s), 3);
}

TEST(LcmFold, ConsecutiveTwoOutOfNineFourFold) {
  EXPECT_EQ(lcm_fold(cons_ideal(2, 9), 4).size(), 26u);
}

TEST(LcmFold, BeyondGeneratorCountIsZeroIdeal) {
  EXPECT_TRUE(lcm_fold(cons_ideal(2, 5), 5).is_zero());
}

TEST(LcmFold, RejectsNonMinimalInputAndZeroFold) {
  MonomialIdeal redundant(3, {SquarefreeMonomial::from_indices(3, {1}),
                              SquarefreeMonomial::from_indices(3, {1, 2})});
  EXPECT_THROW(lcm_fold(redundant, 1), ParameterError);
  EXPECT_THROW(lcm_fold(kofn_ideal(1, 3), 0), ParameterError);
}

TEST(LcmFold, WorkerCountDoesNotChangeResult) {
  MonomialIdeal base = cons_ideal(2, 14);
  for (std::size_t i = 1; i <= base.size(); ++i) {
    MonomialIdeal serial = lcm_fold(base, i);
    EXPECT_EQ(serial, lcm_fold(base, i, {.workers = 3})) << i;
    EXPECT_EQ(serial, lcm_fold(base, i, {.workers = 64})) << i;
  }
}

TEST(Filtration, TwoVariables) {
  LcmFiltration f = filtration(kofn_ideal(1, 2));
  ASSERT_EQ(f.depth(), 2u);
  EXPECT_EQ(f.level(1), kofn_ideal(1, 2));
  ASSERT_EQ(f.level(2).size(), 1u);
  EXPECT_EQ(f.level(2).generator(0), SquarefreeMonomial::from_indices(2, {1, 2}));
  EXPECT_THROW(filtration(MonomialIdeal(2)), ParameterError);
}

TEST(Filtration, TwoOutOfEightFollowsStaircase) {
  LcmFiltration f = filtration(kofn_ideal(2, 8));
  ASSERT_EQ(f.depth(), 28u);
  // Level groups of the 2-out-of-8 staircase: j = 2 | 3 3 | 4 4 4 | ...
  std::vector<int> expected_degree;
  for (int j = 2; j <= 8; ++j) {
    for (int copies = 0; copies < j - 1; ++copies) expected_degree.push_back(j);
  }
  for (std::size_t i = 1; i <= 28; ++i) {
    const MonomialIdeal& level = f.level(i);
    for (Word s : level.supports()) EXPECT_EQ(std::popcount(s), expected_degree[i - 1]) << i;
  }
}

TEST(Filtration, ConsecutiveFiveOutOfTwentyCounts) {
  LcmFiltration f = filtration(cons_ideal(5, 20));
  const std::vector<std::size_t> expected{16, 70, 124, 151, 148, 126, 100, 79, 56, 34};
  for (std::size_t i = 1; i <= expected.size(); ++i) EXPECT_EQ(f.level(i).size(), expected[i - 1]);
}

// Monotonicity, top level, completeness and agreement with both the
// brute-force fold and the naive oracle.
TEST(FiltrationProperties, RandomIdeals) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    MonomialIdeal base = testing::random_ideal(rng, n, 8);
    LcmFiltration f = filtration(base);
    const std::size_t r = base.size();
    Word all = 0;
    for (Word g : base.supports()) all |= g;
    ASSERT_EQ(f.level(r).size(), 1u);
    EXPECT_EQ(f.level(r).supports()[0], all);

    for (std::size_t i = 1; i <= r; ++i) {
      auto expected = testing::brute_fold(testing::words_of(base), i);
      ASSERT_EQ(testing::words_of(f.level(i)), expected);
      ASSERT_EQ(naive_multicut_gens(base, i), f.level(i));
      if (i < r) {
        for (Word g : f.level(i + 1).supports()) {
          SquarefreeMonomial m(n, g);
          EXPECT_TRUE(f.level(i).contains(m));
        }
      }
    }
    // Every lcm of an i-subset lies in level i.
    for (Word mask = 1; mask < (Word{1} << r); ++mask) {
      Word lcm = 0;
      for (std::size_t t = 0; t < r; ++t) {
        if ((mask >> t) & 1U) lcm |= base.supports()[t];
      }
      EXPECT_TRUE(f.level(static_cast<std::size_t>(std::popcount(mask))).contains({n, lcm}));
    }
  }
}

TEST(FiltrationProperties, MatchesNaiveUpToTwelveGenerators) {
  for (const MonomialIdeal& base : {cons_ideal(2, 13), cons_ideal(3, 14), kofn_ideal(1, 12)}) {
    ASSERT_LE(base.size(), 12u);
    for (std::size_t i = 1; i <= base.size(); ++i) {
      EXPECT_EQ(lcm_fold(base, i), naive_multicut_gens(base, i)) << base << " i=" << i;
    }
  }
}

}  // namespace
}  // namespace multicut
