#include <gtest/gtest.h>

#include <random>

#include "mtmetrics/hlepor.hpp"
#include "oracles.hpp"

using namespace mtmetrics;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

namespace {

AlignmentMap align_tokens(const oracle::Tokens& hyp, const oracle::Tokens& ref) {
  return align(std::span<const std::string>(hyp), std::span<const std::string>(ref));
}

}  // namespace

TEST(Align, IdenticalSequencesAlignOnTheDiagonal) {
  const auto a = align_tokens({"a", "b", "c"}, {"a", "b", "c"});
  EXPECT_EQ(a.pairs, (Pairs{{0, 0}, {1, 1}, {2, 2}}));
}

TEST(Align, PrefersTheClosestRelativePosition) {
  // 1/1 against 1/3 and 3/3: the last reference token is the exact match.
  EXPECT_EQ(align_tokens({"a"}, {"a", "x", "a"}).pairs, (Pairs{{0, 2}}));
}

TEST(Align, BreaksCostTiesLexicographically) {
  // 1/2 is equally far from 1/4 and 3/4.
  EXPECT_EQ(align_tokens({"a", "x"}, {"a", "y", "a", "z"}).pairs, (Pairs{{0, 0}}));
  EXPECT_EQ(align_tokens({"a", "y", "a", "z"}, {"a", "x"}).pairs, (Pairs{{0, 0}}));
  EXPECT_EQ(align_tokens({"a"}, {"a", "a"}).pairs, (Pairs{{0, 1}}));
}

TEST(Align, CrossingMatchesAreAllowed) {
  EXPECT_EQ(align_tokens({"a", "b"}, {"b", "a"}).pairs, (Pairs{{0, 1}, {1, 0}}));
}

TEST(Align, EmptyOrDisjointInputs) {
  EXPECT_TRUE(align_tokens({}, {"a"}).empty());
  EXPECT_TRUE(align_tokens({"a"}, {}).empty());
  EXPECT_TRUE(align_tokens({"a", "b"}, {"c", "d"}).empty());
}

TEST(Align, MaximizesCardinalityBeforeCost) {
  const auto a = align_tokens({"x", "x", "x"}, {"x", "y", "y", "y", "y", "x"});
  EXPECT_EQ(a.size(), 2u);
}

TEST(ScaledPositionDifference, IsExactIntegerArithmetic) {
  // |2/3 - 1/4| scaled by 12 = |8 - 3|.
  EXPECT_EQ(scaled_position_difference(1, 0, 3, 4), 5);
  AlignmentMap m{{{0, 0}, {1, 1}, {2, 2}}};
  EXPECT_EQ(scaled_position_difference(m, 3, 4), 1 + 2 + 3);
}

TEST(Align, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const auto hyp = oracle::random_tokens(rng, 7, 3);
    const auto ref = oracle::random_tokens(rng, 7, 3);
    const auto expected = oracle::best_matching_by_enumeration(hyp, ref);
    const auto got = align_tokens(hyp, ref);
    ASSERT_EQ(got.size(), expected.cardinality) << oracle::join(hyp) << " | " << oracle::join(ref);
    ASSERT_EQ(scaled_position_difference(got, hyp.size(), ref.size()), expected.scaled_cost);
    ASSERT_EQ(got.pairs, expected.pairs);
  }
}

TEST(Align, IsInjectiveAndOverEqualTokens) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto hyp = oracle::random_tokens(rng, 30, 5);
    const auto ref = oracle::random_tokens(rng, 30, 5);
    const auto got = align_tokens(hyp, ref);
    std::vector<bool> used(ref.size(), false);
    for (std::size_t k = 0; k < got.pairs.size(); ++k) {
      const auto [i, j] = got.pairs[k];
      ASSERT_EQ(hyp[i], ref[j]);
      ASSERT_FALSE(used[j]);
      used[j] = true;
      if (k > 0) ASSERT_LT(got.pairs[k - 1].first, i);
    }
  }
}
