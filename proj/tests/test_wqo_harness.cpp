#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "raoseq/wqo_harness.hpp"

using namespace raoseq;

TEST(GenerateStream, EnumerateSmallBounds) {
  StreamConfig cfg;
  cfg.bound = 1;
  cfg.max_length = 4;
  cfg.count = 100;
  cfg.generator = Generator::enumerate;
  EXPECT_EQ(generate_stream(cfg), (std::vector<IntegerSequence>{{1, 1}, {1, 1, 1, 1}}));

  cfg.bound = 2;
  cfg.max_length = 3;
  EXPECT_EQ(generate_stream(cfg), (std::vector<IntegerSequence>{{1, 1}, {2, 1, 1}, {2, 2, 2}}));
}

TEST(GenerateStream, EnumerateMatchesBruteForce) {
  const auto listed = enumerate_graphic(3, 6);
  std::vector<IntegerSequence> expected;
  for (int n = 1; n <= 6; ++n)
    for (const auto& raw : brute::nonincreasing_sequences(n, 3)) {
      // nonincreasing_sequences is descending-lex; re-sorted below.
      if (brute::is_graphic(raw)) expected.emplace_back(raw);
    }
  std::stable_sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  EXPECT_EQ(listed, expected);
}

TEST(GenerateStream, RandomIsDeterministicAndValid) {
  StreamConfig cfg;
  cfg.bound = 3;
  cfg.max_length = 9;
  cfg.count = 300;
  cfg.seed = 1234;
  const auto a = generate_stream(cfg);
  EXPECT_EQ(a, generate_stream(cfg));
  ASSERT_EQ(a.size(), 300u);
  for (const auto& d : a) {
    EXPECT_LE(d.max_entry(), 3);
    EXPECT_LE(d.size(), 9u);
    EXPECT_TRUE(erdos_gallai_check(d).graphic);
  }
  cfg.seed = 1235;
  EXPECT_NE(a, generate_stream(cfg));
}

TEST(GenerateStream, RejectsBadConfig) {
  StreamConfig cfg;
  cfg.bound = 1;
  cfg.max_length = 1;
  EXPECT_THROW(generate_stream(cfg), invalid_config);
  cfg.max_length = 4;
  cfg.count = 1;
  EXPECT_THROW(generate_stream(cfg), invalid_config);
  cfg.count = 5;
  cfg.bound = 0;
  EXPECT_THROW(generate_stream(cfg), invalid_config);
}

TEST(FindGoodPair, DuplicatesAreFoundBySufficientTest) {
  const std::vector<IntegerSequence> stream{{1, 1}, {1, 1}, {1, 1}};
  const auto r = find_good_pair(stream, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->i, 1u);
  EXPECT_EQ(r->j, 2u);
  EXPECT_EQ(r->method, Method::sufficient);
  EXPECT_EQ(r->prefix_length_scanned, 2u);
}

TEST(FindGoodPair, TriangleStream) {
  // (2,2,2) is not below (2,2,2,2,2): C5 is the only realization and has no
  // triangle. The first good pair is the edge inside C5.
  ASSERT_FALSE(brute::rao_leq({2, 2, 2}, {2, 2, 2, 2, 2}));
  ASSERT_FALSE(brute::rao_leq({2, 2, 2}, {1, 1}));
  const std::vector<IntegerSequence> stream{{2, 2, 2}, {1, 1}, {2, 2, 2, 2, 2}};
  const auto r = find_good_pair(stream, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->i, 2u);
  EXPECT_EQ(r->j, 3u);
  EXPECT_EQ(r->method, Method::components);
  EXPECT_TRUE(validate_witness(r->witness, stream[1], stream[2]));
}

TEST(FindGoodPair, DuplicateAnywhereYieldsPairNoLaterThanIt) {
  const std::vector<IntegerSequence> stream{{3, 3, 3, 3}, {2, 2, 2}, {3, 3, 2, 2, 2}, {2, 2, 2}};
  const auto r = find_good_pair(stream, 3);
  ASSERT_TRUE(r);
  EXPECT_LE(r->j, 4u);
}

TEST(FindGoodPair, AntichainPrefixHasNoPair) {
  // Equal-length distinct sequences are pairwise incomparable.
  const std::vector<IntegerSequence> stream{{2, 2, 2}, {2, 1, 1}};
  EXPECT_FALSE(find_good_pair(stream, 2));
}

TEST(FindGoodPair, RejectsOutOfBoundStream) {
  EXPECT_THROW(find_good_pair({{3, 3, 3, 3}, {1, 1}}, 2), std::invalid_argument);
}

TEST(FindGoodPair, SufficientWinsAreOracleConfirmed) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    StreamConfig cfg;
    cfg.bound = 1 + seed % 3;
    cfg.max_length = 7;
    cfg.count = 30;
    cfg.seed = seed;
    const auto stream = generate_stream(cfg);
    const auto r = find_good_pair(stream, cfg.bound);
    ASSERT_TRUE(r);
    EXPECT_TRUE(validate_witness(r->witness, stream[r->i - 1], stream[r->j - 1]));
    EXPECT_TRUE(rao_leq_oracle(stream[r->i - 1], stream[r->j - 1]));
    EXPECT_EQ(*find_good_pair(stream, cfg.bound), *r) << "not deterministic";
  }
}

TEST(MineAntichain, BoundOne) { EXPECT_EQ(mine_antichain(1, 4), (std::vector<IntegerSequence>{{1, 1}})); }

TEST(MineAntichain, OutputIsPairwiseIncomparable) {
  const auto chain = mine_antichain(2, 6, {}, 4);
  ASSERT_GT(chain.size(), 1u);
  for (const auto& a : chain)
    for (const auto& b : chain) {
      if (a == b) continue;
      EXPECT_FALSE(rao_leq_oracle(a, b)) << to_string(a) << " " << to_string(b);
    }
  // Maximal: every other candidate is comparable with something kept.
  for (const auto& d : enumerate_graphic(2, 6)) {
    if (d.size() < 4 || std::find(chain.begin(), chain.end(), d) != chain.end()) continue;
    bool comparable = false;
    for (const auto& a : chain) comparable = comparable || rao_leq_oracle(a, d) || rao_leq_oracle(d, a);
    EXPECT_TRUE(comparable) << to_string(d);
  }
}

TEST(MineAntichain, CapExceeded) {
  EXPECT_THROW(mine_antichain(2, 9), search_limit_exceeded);
  EXPECT_THROW(mine_antichain(0, 4), invalid_config);
}
