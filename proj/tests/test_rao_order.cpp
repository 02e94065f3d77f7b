#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "raoseq/rao_order.hpp"
#include "raoseq/wqo_harness.hpp"
#include "test_support.hpp"

using namespace raoseq;

TEST(Oracle, Examples) {
  const IntegerSequence edge{1, 1}, matching{1, 1, 1, 1};
  const auto w = rao_leq_oracle(edge, matching);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_witness(*w, edge, matching));

  // (2,2,2,2) is realized only by C4, which has no induced triangle.
  ASSERT_FALSE(brute::rao_leq({2, 2, 2}, {2, 2, 2, 2}));
  EXPECT_FALSE(rao_leq_oracle({2, 2, 2}, {2, 2, 2, 2}));
}

TEST(Oracle, ReflexiveOnEveryGraphicSequence) {
  for (const auto& d : enumerate_graphic(7, 8)) {
    const auto w = rao_leq_oracle(d, d);
    ASSERT_TRUE(w) << to_string(d);
    EXPECT_TRUE(validate_witness(*w, d, d));
  }
}

TEST(Oracle, AgreesWithBruteForceUpToSixVertices) {
  const auto all = enumerate_graphic(5, 6);
  for (const auto& d2 : all) {
    for (const auto& d1 : all) {
      if (d1.size() > d2.size()) continue;
      const auto w = rao_leq_oracle(d1, d2);
      ASSERT_EQ(w.has_value(), brute::rao_leq(d1.entries(), d2.entries())) << to_string(d1) << " " << to_string(d2);
      if (w) { EXPECT_TRUE(validate_witness(*w, d1, d2)); }
    }
  }
}

TEST(Oracle, LowerSetMatchesPairwiseOracle) {
  const auto all = enumerate_graphic(3, 6);
  for (const auto& d2 : all) {
    const auto lower = oracle_lower_set(d2);
    for (const auto& d1 : all) EXPECT_EQ(lower.contains(d1), rao_leq_oracle(d1, d2).has_value());
  }
}

TEST(Oracle, CapAndErrors) {
  const IntegerSequence nine(std::vector<degree_t>(9, 2));
  EXPECT_THROW(rao_leq_oracle({1, 1}, nine), search_limit_exceeded);
  EXPECT_TRUE(rao_leq_oracle({1, 1}, nine, OracleOptions{9}));
  EXPECT_THROW(rao_leq_oracle({3, 1}, {1, 1}), not_graphic);
  EXPECT_FALSE(rao_leq_oracle({1, 1, 1, 1}, {1, 1}));
}

TEST(EnumerateRealizations, CountsLabeledGraphs) {
  // Labeled 2-regular graphs on 5 vertices: 12 five-cycles. With vertex i
  // pinned to degree d[i] every labeled realization is visited exactly once.
  std::size_t count = 0;
  enumerate_realizations(IntegerSequence(std::vector<degree_t>(5, 2)), [&](const auto&) {
    ++count;
    return false;
  });
  EXPECT_EQ(count, 12u);

  for (const auto& d : enumerate_graphic(5, 6)) {
    std::size_t visited = 0;
    enumerate_realizations(d, [&](const auto&) {
      ++visited;
      return false;
    });
    // Brute force counts graphs whose sorted degrees match; pinning vertex i to
    // d[i] divides out the multinomial of degree-value multiplicities.
    std::size_t labeled = brute::graphs_by_degrees(static_cast<int>(d.size())).at(d.entries()).size();
    std::size_t arrangements = 1, run = 1;
    for (std::size_t i = 1; i <= d.size(); ++i) arrangements *= i;
    for (std::size_t i = 1; i <= d.size(); ++i) {
      if (i < d.size() && d[i] == d[i - 1]) {
        ++run;
        continue;
      }
      for (std::size_t f = 2; f <= run; ++f) arrangements /= f;
      run = 1;
    }
    EXPECT_EQ(visited * arrangements, labeled) << to_string(d);
  }
}

TEST(Sufficient, Examples) {
  const auto w = rao_leq_sufficient({1, 1}, {1, 1, 1, 1}, 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g_large, disjoint_union(graphs::path(2), graphs::path(2)));
  EXPECT_EQ(w->embedding, (std::vector<vertex_t>{0, 1}));
  EXPECT_TRUE(validate_witness(*w, {1, 1}, {1, 1, 1, 1}));

  // The gap expands to (2): one vertex of degree 2, not graphic.
  EXPECT_FALSE(rao_leq_sufficient({2, 2, 2}, {2, 2, 2, 2}, 2));

  const auto same = rao_leq_sufficient({3, 2, 2, 1}, {3, 2, 2, 1}, 3);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->g_small, same->g_large);
}

TEST(Sufficient, Errors) {
  EXPECT_THROW(rao_leq_sufficient({3, 3, 3, 3}, {3, 3, 3, 3}, 2), std::invalid_argument);
  EXPECT_THROW(rao_leq_sufficient({3, 1}, {1, 1}, 3), not_graphic);
  // Incomparable regularity vectors: inconclusive, not an error.
  EXPECT_FALSE(rao_leq_sufficient({2, 2, 2}, {1, 1}, 2));
}

TEST(Sufficient, LargeGapAlwaysSucceeds) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t bound = 1 + rng() % 4;
    const auto d1 = test_support::random_graphic(rng, 1 + static_cast<degree_t>(rng() % bound), 2, 12);
    // Gap vector with at least N^2 vertices and even degree sum.
    RegularitySequence gap(bound);
    const std::size_t extra = bound * bound + rng() % 10;
    for (std::size_t k = 0; k < extra; ++k) {
      const std::size_t deg = 1 + rng() % bound;
      gap.set_count(deg, gap.count(deg) + 1);
    }
    if (gap.degree_sum() % 2 != 0) gap.set_count(1, gap.count(1) + 1);
    RegularitySequence v2 = to_regularity(d1, bound);
    for (std::size_t i = 1; i <= bound; ++i) v2.set_count(i, v2.count(i) + gap.count(i));
    const auto d2 = from_regularity(v2);
    const auto w = rao_leq_sufficient(d1, d2, bound);
    ASSERT_TRUE(w) << to_string(d1) << " " << to_string(d2);
    EXPECT_TRUE(validate_witness(*w, d1, d2));
  }
}

TEST(Sufficient, DisjointUnionWitness) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d1 = test_support::random_graphic(rng, 3, 2, 10);
    const auto e = test_support::random_graphic(rng, 3, 2, 10);
    const auto d2 = degree_integer_sequence(disjoint_union(realize(d1), realize(e)));
    const auto w = rao_leq_sufficient(d1, d2, 3);
    ASSERT_TRUE(w);
    EXPECT_TRUE(validate_witness(*w, d1, d2));
  }
}

TEST(Higman, Examples) {
  const auto k3 = graphs::complete(3), c4 = graphs::cycle(4);
  const auto c2 = ComponentDecomposition::from_parts({k3, c4});
  EXPECT_TRUE(higman_embeds(ComponentDecomposition::from_parts({k3}), c2, BaseOrder::equality));
  EXPECT_FALSE(higman_embeds(ComponentDecomposition::from_parts({k3, k3}), c2, BaseOrder::equality));
  EXPECT_TRUE(higman_embeds(ComponentDecomposition::from_parts({graphs::path(3)}),
                            ComponentDecomposition::from_parts({graphs::cycle(5)}), BaseOrder::induced));
  EXPECT_FALSE(higman_embeds(ComponentDecomposition::from_parts({graphs::path(3)}),
                             ComponentDecomposition::from_parts({graphs::cycle(5)}), BaseOrder::equality));
}

TEST(Higman, MatchingAvoidsGreedyDeadEnd) {
  // The edge relates to both K3 and P3, the triangle only to K3.
  const auto small = ComponentDecomposition::from_parts({graphs::path(2), graphs::complete(3)});
  const auto large = ComponentDecomposition::from_parts({graphs::complete(3), graphs::path(3)});
  EXPECT_TRUE(higman_embeds(small, large, BaseOrder::induced));
  const auto large_first = ComponentDecomposition::from_parts({graphs::path(3), graphs::complete(3)});
  EXPECT_TRUE(higman_embeds(small, large_first, BaseOrder::induced));
}

TEST(Higman, DecompositionIsCanonicalAndSorted) {
  const auto a = ComponentDecomposition::of(disjoint_union(graphs::cycle(4), graphs::complete(3)));
  const auto b = ComponentDecomposition::of(disjoint_union(graphs::complete(3), graphs::cycle(4)));
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.parts()[0].vertex_count(), 3u);
  EXPECT_THROW(ComponentDecomposition::from_parts({SimpleGraph(2)}), std::invalid_argument);
}

TEST(Higman, ComponentTooLargeForInducedChecker) {
  InducedSearchOptions opts;
  opts.max_host_vertices = 5;
  EXPECT_THROW(higman_embeds(ComponentDecomposition::from_parts({graphs::path(3)}),
                             ComponentDecomposition::from_parts({graphs::cycle(6)}), BaseOrder::induced, opts),
               search_limit_exceeded);
}

TEST(ViaComponents, Examples) {
  const IntegerSequence d1(std::vector<degree_t>(12, 2)), d2(std::vector<degree_t>(16, 2));
  const auto w = rao_leq_via_components(d1, d2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_witness(*w, d1, d2));
  EXPECT_EQ(components(w->g_small).size(), 3u);
  EXPECT_EQ(components(w->g_large).size(), 4u);

  const IntegerSequence d{3, 3, 2, 2, 2};
  const auto same = rao_leq_via_components(d, d);
  ASSERT_TRUE(same);
  EXPECT_TRUE(validate_witness(*same, d, d));
}

TEST(ViaComponents, WitnessesRevalidate) {
  std::mt19937_64 rng(47);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d1 = test_support::random_graphic(rng, 1 + static_cast<degree_t>(rng() % 3), 2, 10);
    const auto d2 = test_support::random_graphic(rng, 3, 2, 30);
    const auto w = rao_leq_via_components(d1, d2);
    if (!w) continue;
    ++found;
    EXPECT_TRUE(validate_witness(*w, d1, d2));
    // Each matched component embeds on its own.
    for (const auto& members : component_vertex_sets(w->g_small)) {
      std::vector<vertex_t> image;
      for (vertex_t v : members) image.push_back(w->embedding[v]);
      EXPECT_TRUE(is_induced_embedding(induced_subgraph(w->g_small, members), w->g_large, image));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Witness, ComposesTransitively) {
  const auto all = enumerate_graphic(3, 5);
  std::size_t composed = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto ab = rao_leq_oracle(a, b);
      if (!ab) continue;
      for (const auto& c : all) {
        if (c.size() < b.size()) continue;
        // Find a realization of c containing ab's large graph as induced subgraph.
        std::optional<RaoWitness> bc;
        enumerate_realizations(c, [&](const std::vector<std::uint64_t>& masks) {
          const auto host = detail::graph_from_masks(masks);
          if (auto phi = is_induced_subgraph(ab->g_large, host)) {
            bc = RaoWitness{ab->g_large, host, *phi};
            return true;
          }
          return false;
        });
        if (!bc) continue;
        const auto ac = compose(*ab, *bc);
        ASSERT_TRUE(ac);
        EXPECT_TRUE(validate_witness(*ac, a, c));
        ++composed;
      }
    }
  EXPECT_GT(composed, 0u);
}

TEST(Witness, ValidationRejectsBrokenWitnesses) {
  auto w = *rao_leq_oracle({1, 1}, {2, 1, 1});
  EXPECT_TRUE(validate_witness(w, {1, 1}, {2, 1, 1}));
  EXPECT_FALSE(validate_witness(w, {1, 1}, {1, 1}));
  auto dup = w;
  dup.embedding = {0, 0};
  EXPECT_FALSE(validate_witness(dup, {1, 1}, {2, 1, 1}));
  // Mapping the edge onto the two leaves of the path breaks adjacency.
  auto leaves = w;
  std::vector<vertex_t> ends;
  for (vertex_t v = 0; v < 3; ++v)
    if (w.g_large.degree(v) == 1) ends.push_back(v);
  leaves.embedding = ends;
  EXPECT_FALSE(validate_witness(leaves, {1, 1}, {2, 1, 1}));
}
