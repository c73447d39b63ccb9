#include <gtest/gtest.h>

#include <random>

#include "multicut/consecutive.hpp"
#include "multicut/errors.hpp"
#include "multicut/monomial.hpp"
#include "test_support.hpp"

namespace multicut {
namespace {

using testing::Word;

SquarefreeMonomial mono(int n, std::initializer_list<int> indices) {
  return SquarefreeMonomial::from_indices(n, indices);
}

TEST(SquarefreeMonomial, RejectsOutOfRangeInput) {
  EXPECT_THROW(SquarefreeMonomial(0, 0), ParameterError);
  EXPECT_THROW(SquarefreeMonomial(64, 0), ParameterError);
  EXPECT_THROW(SquarefreeMonomial(3, 0b1000), ParameterError);
  EXPECT_THROW(mono(3, {4}), ParameterError);
  EXPECT_NO_THROW(SquarefreeMonomial(63, (Word{1} << 63) - 1));
}

TEST(SquarefreeMonomial, DegreeAndIndices) {
  auto m = mono(9, {1, 2, 3, 4, 6, 7});
  EXPECT_EQ(m.degree(), 6);
  EXPECT_EQ(m.indices(), (std::vector<int>{1, 2, 3, 4, 6, 7}));
  EXPECT_TRUE(m.contains(6));
  EXPECT_FALSE(m.contains(5));
}

TEST(Lcm, UnionOfSupports) {
  EXPECT_EQ(lcm(mono(3, {1, 2}), mono(3, {2, 3})), mono(3, {1, 2, 3}));
  EXPECT_EQ(lcm(mono(3, {1, 2}), mono(3, {1, 2})), mono(3, {1, 2}));
  EXPECT_THROW(lcm(mono(3, {1}), mono(4, {1})), DimensionError);
}

TEST(Lcm, GeneratorsOneTwoThreeSixOfConsecutiveTwoOutOfNine) {
  MonomialIdeal j29 = cons_ideal(2, 9);
  SquarefreeMonomial acc = SquarefreeMonomial::one(9);
  for (int t : {1, 2, 3, 6}) acc = lcm(acc, j29.generator(static_cast<std::size_t>(t - 1)));
  EXPECT_EQ(acc, mono(9, {1, 2, 3, 4, 6, 7}));
}

TEST(Divides, SubsetRelation) {
  EXPECT_TRUE(divides(mono(3, {2}), mono(3, {1, 2, 3})));
  EXPECT_FALSE(divides(mono(4, {1, 4}), mono(4, {1, 2, 3})));
  auto m = mono(5, {2, 5});
  EXPECT_TRUE(divides(m, m));
  EXPECT_THROW(divides(mono(3, {1}), mono(4, {1})), DimensionError);
}

TEST(Minimalize, DropsMultiplesAndDuplicates) {
  std::vector<SquarefreeMonomial> gens{mono(3, {1}), mono(3, {1, 2}), mono(3, {3}), mono(3, {1})};
  MonomialIdeal ideal = minimalize(3, gens);
  EXPECT_TRUE(ideal.minimal());
  EXPECT_EQ(ideal.generators(), (std::vector<SquarefreeMonomial>{mono(3, {1}), mono(3, {3})}));

  std::vector<SquarefreeMonomial> incomparable{mono(3, {2, 3}), mono(3, {1, 2})};
  EXPECT_EQ(minimalize(3, incomparable).generators(),
            (std::vector<SquarefreeMonomial>{mono(3, {1, 2}), mono(3, {2, 3})}));
}

TEST(Minimalize, EmptyInputIsZeroIdeal) {
  MonomialIdeal zero = minimalize(4, {});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.is_unit());
  EXPECT_TRUE(MonomialIdeal::unit(4).is_unit());
  EXPECT_FALSE(ideal_equals(zero, MonomialIdeal::unit(4)));
}

TEST(Minimalize, PairsAndTriplesOfEight) {
  std::vector<Word> words;
  std::vector<SquarefreeMonomial> gens;
  for (Word w = 1; w < 256; ++w) {
    if (std::popcount(w) == 2 || std::popcount(w) == 3) {
      words.push_back(w);
      gens.emplace_back(8, w);
    }
  }
  std::vector<Word> expected = testing::brute_minimal(words);
  ASSERT_EQ(expected.size(), 28u);
  MonomialIdeal ideal = minimalize(8, gens);
  EXPECT_EQ(testing::words_of(ideal), expected);
}

TEST(Colon, Examples) {
  MonomialIdeal path(3, {mono(3, {1, 2}), mono(3, {2, 3})});
  EXPECT_TRUE(colon(path, mono(3, {1, 2})).is_unit());
  MonomialIdeal single(3, {mono(3, {2, 3})});
  EXPECT_EQ(colon(single, mono(3, {1, 2})).generators(),
            (std::vector<SquarefreeMonomial>{mono(3, {3})}));
  EXPECT_THROW(colon(path, mono(4, {1})), DimensionError);
}

TEST(Colon, MembershipOnAllStates) {
  MonomialIdeal ideal(4, {mono(4, {1, 2}), mono(4, {3, 4})});
  SquarefreeMonomial m = mono(4, {1});
  MonomialIdeal quotient = colon(ideal, m);
  EXPECT_EQ(quotient.generators(), (std::vector<SquarefreeMonomial>{mono(4, {2}), mono(4, {3, 4})}));
  for (Word s = 0; s < 16; ++s) {
    SquarefreeMonomial state(4, s);
    EXPECT_EQ(quotient.contains(state), ideal.contains(lcm(state, m))) << s;
  }
}

TEST(IdealEquals, RedundantGeneratorsIgnored) {
  MonomialIdeal a(3, {mono(3, {1, 2})});
  MonomialIdeal b(3, {mono(3, {1, 2}), mono(3, {1, 2, 3})});
  EXPECT_FALSE(b.minimal());
  EXPECT_TRUE(ideal_equals(a, b));
  EXPECT_FALSE(ideal_equals(MonomialIdeal(3, {mono(3, {1})}), MonomialIdeal(3, {mono(3, {2})})));
  EXPECT_THROW(ideal_equals(a, MonomialIdeal(4)), DimensionError);
}

// Lattice laws, minimalize idempotence and the colon membership identity on
// random inputs.
TEST(MonomialProperties, RandomizedLaws) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Word mask = (Word{1} << n) - 1;
    SquarefreeMonomial a(n, rng() & mask), b(n, rng() & mask), c(n, rng() & mask);
    EXPECT_EQ(lcm(a, b), lcm(b, a));
    EXPECT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
    EXPECT_EQ(lcm(a, a), a);
    EXPECT_GE(lcm(a, b).degree(), std::max(a.degree(), b.degree()));
    EXPECT_TRUE(divides(a, lcm(a, b)));

    MonomialIdeal ideal = testing::random_ideal(rng, n, 8);
    MonomialIdeal again = minimalize(n, ideal.generators());
    EXPECT_EQ(again, minimalize(n, again.generators()));
    EXPECT_TRUE(ideal_equals(ideal, again));

    MonomialIdeal quotient = colon(ideal, a);
    for (Word s = 0; s <= mask; ++s) {
      SquarefreeMonomial state(n, s);
      ASSERT_EQ(quotient.contains(state), ideal.contains(lcm(state, a)));
    }
  }
}

}  // namespace
}  // namespace multicut
