#include <gtest/gtest.h>

#include <array>

#include "qseal/error.hpp"
#include "qseal/sharing.hpp"
#include "test_support.hpp"

namespace qseal {
namespace {

using testing::within_three_sigma;

TEST(SplitBit, SingleShareIsTheBit) {
  RandomSource rng(1);
  EXPECT_EQ(split_bit(0, 1, rng).shares, std::vector<unsigned>{0});
  EXPECT_EQ(split_bit(1, 1, rng).shares, std::vector<unsigned>{1});
  EXPECT_THROW(split_bit(1, 0, rng), Error);
}

TEST(SplitBit, SharesXorToTheBit) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RandomSource rng(seed);
    const auto shares = split_bit(1, 3, rng);
    ASSERT_EQ(shares.size(), 3U);
    EXPECT_EQ(shares.shares[0] ^ shares.shares[1] ^ shares.shares[2], 1U);
  }
}

TEST(SplitBit, FirstShareIsUniform) {
  constexpr int kTrials = 100000;
  int zeros = 0;
  for (int i = 0; i < kTrials; ++i) {
    RandomSource rng = RandomSource(5).child(i);
    zeros += split_bit(1, 2, rng).shares[0] == 0 ? 1 : 0;
  }
  EXPECT_TRUE(within_three_sigma(static_cast<double>(zeros) / kTrials, 0.5, kTrials));
}

TEST(SplitBit, ProperSubsetsAreIndependentOfTheBit) {
  // The first two of three shares take each of the four values with
  // probability 1/4 whatever the bit is.
  constexpr int kTrials = 100000;
  for (unsigned b : {0U, 1U}) {
    std::array<int, 4> counts{};
    for (int i = 0; i < kTrials; ++i) {
      RandomSource rng = RandomSource(17 + b).child(i);
      const auto s = split_bit(b, 3, rng).shares;
      ++counts[2 * s[0] + s[1]];
    }
    for (int c : counts) EXPECT_TRUE(within_three_sigma(static_cast<double>(c) / kTrials, 0.25, kTrials)) << b;
  }
}

TEST(Combine, ExamplesAndInverseProperty) {
  EXPECT_EQ(combine(ShareSet{{1}}), 1U);
  EXPECT_EQ(combine(ShareSet{{1, 0, 1}}), 0U);
  RandomSource meta(3);
  for (int i = 0; i < 10000; ++i) {
    const unsigned b = meta.bit();
    const std::size_t s = 1 + meta.below(8);
    RandomSource rng = meta.child(i);
    EXPECT_EQ(combine(split_bit(b, s, rng)), b);
  }
}

TEST(SealMessage, SingleShareDegeneratesToOneSeal) {
  RandomSource rng(2);
  const std::vector<unsigned> message = {1};
  const auto sealed = seal_message(message, {9, 3, 0}, 1, rng);
  ASSERT_EQ(sealed.size(), 1U);
  ASSERT_EQ(sealed[0].registers.size(), 1U);
  EXPECT_EQ(sealed[0].records[0].code_bit, 1U);
}

TEST(SealMessage, BitMajorShareMinorOrdering) {
  RandomSource rng(4);
  const std::vector<unsigned> message = {1, 0, 0, 1, 1, 1, 0, 1};
  const auto sealed = seal_message(message, {9, 3, 0}, 2, rng);
  ASSERT_EQ(sealed.size(), 8U);
  std::size_t registers = 0;
  for (std::size_t i = 0; i < sealed.size(); ++i) {
    ASSERT_EQ(sealed[i].registers.size(), 2U);
    registers += sealed[i].registers.size();
    EXPECT_EQ(sealed[i].records[0].code_bit ^ sealed[i].records[1].code_bit, message[i]) << i;
  }
  EXPECT_EQ(registers, 16U);
}

TEST(SealMessage, RejectsInvalidParams) {
  RandomSource rng(1);
  const std::vector<unsigned> message = {1};
  EXPECT_THROW(seal_message(message, {6, 3, 0}, 2, rng), Error);
}

TEST(SealMessage, FourSharePipelineRates) {
  // Every share read correct happens with p^4; the XOR also survives an even
  // number of wrong share reads, so recovery is (1 + (2p - 1)^4)/2 >= p^4.
  constexpr int kTrials = 20000;
  const SealParams params{9, 3, 0};
  const double p = testing::majority_success_tail(9, 3);
  int all_correct = 0;
  int recovered = 0;
  for (int i = 0; i < kTrials; ++i) {
    RandomSource rng = RandomSource(55).child(i);
    const std::vector<unsigned> message = {rng.bit()};
    auto sealed = seal_message(message, params, 4, rng);
    const auto read = read_shared_bit(sealed[0].registers, rng);
    bool every = true;
    for (std::size_t j = 0; j < 4; ++j) every &= read.share_reads[j].bit == sealed[0].records[j].code_bit;
    all_correct += every ? 1 : 0;
    recovered += read.bit == message[0] ? 1 : 0;
  }
  const double p4 = std::pow(p, 4);
  EXPECT_TRUE(within_three_sigma(static_cast<double>(all_correct) / kTrials, p4, kTrials));
  const double xor_ok = (1.0 + std::pow(2 * p - 1, 4)) / 2.0;
  EXPECT_TRUE(within_three_sigma(static_cast<double>(recovered) / kTrials, xor_ok, kTrials));
  EXPECT_LE(p4, p);
}

TEST(CatchProbability, Values) {
  EXPECT_DOUBLE_EQ(catch_probability(0.75, 1), 0.25);
  EXPECT_EQ(catch_probability(Rational(3, 4), 1), Rational(1, 4));
  EXPECT_NEAR(catch_probability(0.55, 10), 0.9974670, 5e-8);
  EXPECT_THROW(catch_probability(1.5, 2), Error);
  EXPECT_THROW(catch_probability(0.5, 0), Error);
}

TEST(CatchProbability, StrictlyIncreasingInShares) {
  for (double p : {0.25, 0.55, 0.75, 0.99}) {
    EXPECT_DOUBLE_EQ(catch_probability(p, 1), 1.0 - p);
    // Consecutive terms differ by p^s (1 - p); binary64 resolves that only
    // while it stays well above the spacing of doubles near 1.
    for (std::size_t s = 1; std::pow(p, s) * (1 - p) > 1e-13; ++s)
      EXPECT_LT(catch_probability(p, s), catch_probability(p, s + 1));
  }
  const Rational p(11, 20);
  for (std::size_t s = 1; s < 60; ++s) EXPECT_LT(catch_probability(p, s), catch_probability(p, s + 1));
}

}  // namespace
}  // namespace qseal
