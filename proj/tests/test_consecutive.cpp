#include <gtest/gtest.h>

#include <map>
#include <string>

#include "multicut/consecutive.hpp"
#include "multicut/errors.hpp"
#include "multicut/lcm_filtration.hpp"
#include "test_support.hpp"

namespace multicut {
namespace {

using testing::Word;

std::string digits(const GeneratorSubset& s) {
  std::string out;
  for (int e : s.elements) out += std::to_string(e);
  return out;
}

// i-subsets of {1..m} whose gaps are all >= k, by filtering every subset.
std::vector<std::vector<int>> filtered_subsets(int k, int n, int i) {
  const int m = n - k + 1;
  std::vector<std::vector<int>> out;
  for (Word mask = 0; mask < (Word{1} << m); ++mask) {
    if (std::popcount(mask) != i) continue;
    std::vector<int> elements;
    for (int t = 0; t < m; ++t) {
      if ((mask >> t) & 1U) elements.push_back(t + 1);
    }
    bool ok = true;
    for (std::size_t t = 1; t < elements.size(); ++t) {
      int gap = elements[t] - elements[t - 1] - 1;
      if (gap >= 1 && gap < k) ok = false;
    }
    if (ok) out.push_back(elements);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ConsIdeal, Generators) {
  MonomialIdeal j29 = cons_ideal(2, 9);
  ASSERT_EQ(j29.size(), 8u);
  for (int t = 1; t <= 8; ++t) {
    EXPECT_EQ(j29.generator(static_cast<std::size_t>(t - 1)),
              SquarefreeMonomial::from_indices(9, {t, t + 1}));
  }
  EXPECT_EQ(cons_ideal(6, 6).size(), 1u);
  EXPECT_EQ(cons_ideal(6, 6).generator(0).degree(), 6);
  EXPECT_EQ(cons_ideal(5, 20).size(), 16u);
  EXPECT_THROW(cons_ideal(0, 4), ParameterError);
  EXPECT_THROW(cons_ideal(5, 4), ParameterError);
}

TEST(Decompose, BlocksAndGaps) {
  GeneratorSubset s{2, 9, {2, 3, 6, 8}};
  BlockDecomposition d = decompose(s);
  EXPECT_EQ(d.blocks, (std::vector<Block>{{2, 2}, {6, 1}, {8, 1}}));
  EXPECT_EQ(d.gaps, (std::vector<int>{2, 1}));
  EXPECT_EQ(d.smallest_gap(), 1);
  EXPECT_EQ(decompose({2, 9, {3, 4, 5}}).smallest_gap(), 0);
}

TEST(Decompose, ReconstructsElements) {
  for (const auto& elements : filtered_subsets(1, 10, 5)) {
    BlockDecomposition d = decompose({1, 10, elements});
    std::vector<int> rebuilt;
    for (const Block& b : d.blocks) {
      for (int t = 0; t < b.size; ++t) rebuilt.push_back(b.start + t);
    }
    EXPECT_EQ(rebuilt, elements);
    for (std::size_t t = 0; t < d.gaps.size(); ++t) {
      EXPECT_GE(d.gaps[t], 1);
      EXPECT_EQ(d.blocks[t + 1].start - (d.blocks[t].start + d.blocks[t].size), d.gaps[t]);
    }
  }
}

TEST(Admissible, TwoOutOfNineFourFoldListing) {
  std::vector<std::string> listed;
  for (const auto& s : admissible_subsets(2, 9, 4)) listed.push_back(digits(s));
  std::vector<std::string> expected{
      "1234", "2345", "3456", "4567", "5678",                  // one block of 4
      "1236", "1237", "1238", "2347", "2348", "3458",          // 3,1
      "1456", "1567", "2567", "1678", "2678", "3678",          // 1,3
      "1256", "1267", "1278", "2367", "2378", "3478",          // 2,2
      "1258", "1458", "1478"};                                 // 2,1,1 and permutations
  std::sort(expected.begin(), expected.end());
  EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  EXPECT_EQ(listed, expected);
}

TEST(Admissible, SingletonsAndRange) {
  auto singles = admissible_subsets(3, 7, 1);
  ASSERT_EQ(singles.size(), 5u);
  for (int t = 1; t <= 5; ++t) EXPECT_EQ(singles[t - 1].elements, std::vector<int>{t});
  EXPECT_EQ(admissible_subsets(5, 20, 4).size(), 151u);
  EXPECT_THROW(admissible_subsets(2, 9, 0), ParameterError);
  EXPECT_THROW(admissible_subsets(2, 9, 9), ParameterError);
}

TEST(Admissible, MatchesFilteredSubsets) {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= n - k + 1; ++i) {
        std::vector<std::vector<int>> walked;
        for (const auto& s : admissible_subsets(k, n, i)) walked.push_back(s.elements);
        ASSERT_EQ(walked, filtered_subsets(k, n, i)) << k << "," << n << "," << i;
      }
    }
  }
}

TEST(ConsMulticut, TwoOutOfNineFourFold) {
  MonomialIdeal level = cons_multicut_ideal(2, 9, 4);
  EXPECT_EQ(level.size(), 26u);
  EXPECT_TRUE(level.minimal());
  EXPECT_TRUE(level.contains(SquarefreeMonomial::from_indices(9, {1, 2, 3, 4, 6, 7})));
  std::map<int, int> degrees;
  for (const auto& g : level.generators()) ++degrees[g.degree()];
  EXPECT_EQ(degrees, (std::map<int, int>{{5, 5}, {6, 18}, {7, 3}}));
}

TEST(ConsMulticut, TopLevelIsEverything) {
  MonomialIdeal top = cons_multicut_ideal(2, 9, 8);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top.generator(0).degree(), 9);
}

TEST(ConsMulticut, TwoOutOfTwentyCounts) {
  const std::vector<std::size_t> expected{19,   154,  712,  2138, 4537, 7248, 9143,
                                          9434, 8169, 6046, 3874, 2164, 1067, 448,
                                          180,  49,   19,   2,    1};
  for (int i = 1; i <= 19; ++i) EXPECT_EQ(cons_multicut_ideal(2, 20, i).size(), expected[i - 1]);
}

// The admissible-subset generators are exactly the minimal lcm generators.
TEST(ConsMulticut, EqualsLcmFold) {
  for (int k : {2, 3}) {
    for (int n = k; n <= 14; ++n) {
      MonomialIdeal base = cons_ideal(k, n);
      for (int i = 1; i <= n - k + 1; ++i) {
        MonomialIdeal closed = cons_multicut_ideal(k, n, i);
        ASSERT_TRUE(ideal_equals(closed, lcm_fold(base, static_cast<std::size_t>(i))))
            << k << "," << n << "," << i;
        // Distinct admissible subsets give distinct supports, and no two divide.
        ASSERT_EQ(closed.size(), admissible_subsets(k, n, i).size());
        ASSERT_EQ(testing::brute_minimal(testing::words_of(closed)), testing::words_of(closed));
      }
    }
  }
}

TEST(DegreeOf, BlockFormula) {
  EXPECT_EQ(degree_of({2, 9, {1, 2, 3, 6}}), 6);
  EXPECT_EQ(degree_of({2, 9, {1, 2, 5, 8}}), 7);
  EXPECT_EQ(degree_of({5, 20, {1}}), 5);
  for (int k = 1; k <= 5; ++k) {
    for (int n = k; n <= 16; ++n) {
      for (int i = 1; i <= n - k + 1; ++i) {
        for_each_admissible(k, n, i, [&](const GeneratorSubset& s) {
          ASSERT_EQ(degree_of(s), std::popcount(multicut_support(s)));
        });
      }
    }
  }
}

TEST(CountGenerators, Examples) {
  EXPECT_EQ(count_generators(5, 20, 2), 70u);
  EXPECT_EQ(count_generators(2, 9, 4), 26u);
  EXPECT_EQ(count_generators(4, 11, 1), 8u);
  EXPECT_EQ(count_generators(2, 9, 8), 1u);
  EXPECT_THROW(count_generators(2, 9, 9), ParameterError);
}

TEST(CountGenerators, MatchesEnumeration) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = k; n <= 25; ++n) {
      for (int i = 1; i <= n - k + 1; ++i) {
        BigCount enumerated = 0;
        for_each_admissible(k, n, i, [&](const GeneratorSubset&) { ++enumerated; });
        ASSERT_EQ(count_generators(k, n, i), enumerated) << k << "," << n << "," << i;
      }
    }
  }
}

}  // namespace
}  // namespace multicut
