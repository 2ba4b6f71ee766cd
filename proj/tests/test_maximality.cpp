#include <gtest/gtest.h>

#include "strength/canonical.hpp"
#include "strength/maximality.hpp"
#include "strength/oracles.hpp"
#include "support/fixtures.hpp"

using namespace strength;
using namespace strength::fixtures;

TEST(IsKMaximal, Examples) {
  const KMaximalVerdict kk2 = is_k_maximal(parallel(3), 3);
  EXPECT_TRUE(kk2.flag);
  EXPECT_EQ(kk2.evidence.tau, PackingNumber(3));
  EXPECT_EQ(kk2.evidence.kappa_bar->value, 3u);

  const Multigraph g = double_pair_plus_vertex();
  EXPECT_TRUE(is_k_maximal(g, 2).flag);
  EXPECT_EQ(g.edge_count(), max_edge_count(3, 2));

  const KMaximalVerdict c4 = is_k_maximal(cycle(4), 2);
  EXPECT_FALSE(c4.flag);
  EXPECT_EQ(c4.reason, "tau=1 != k");
}

TEST(IsKMaximal, Preconditions) {
  EXPECT_THROW(is_k_maximal(k1(), 1), error);
  EXPECT_THROW(is_k_maximal(cycle(3), 0), error);
  EXPECT_EQ(is_k_maximal(two_disjoint_k2(), 1).reason, "disconnected");
}

TEST(MaxEdgeCount, Examples) {
  EXPECT_EQ(max_edge_count(5, 2), 8u);
  EXPECT_EQ(max_edge_count(1, 4), 0u);
  EXPECT_EQ(max_edge_count(2, 3), 3u);
  EXPECT_THROW(max_edge_count(0, 1), error);
}

TEST(Generate, Examples) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::uint64_t seed : {0u, 1u, 99u}) EXPECT_TRUE(isomorphic(generate_k_maximal(2, k, seed), parallel(k)));
  const Multigraph g = generate_k_maximal(3, 2, 0);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(generate_k_maximal(7, 3, 5), generate_k_maximal(7, 3, 5));
  EXPECT_THROW(generate_k_maximal(1, 2, 0), error);
}

TEST(JoinDecompose, Examples) {
  const JoinTree kk2 = join_decompose(parallel(3), 3);
  ASSERT_EQ(kk2.nodes.size(), 3u);
  EXPECT_EQ(kk2.nodes[kk2.root].join_edges, (std::vector<EdgeId>{EdgeId(0), EdgeId(1), EdgeId(2)}));
  EXPECT_EQ(kk2.leaf_count(), 2u);

  const Multigraph small = double_pair_plus_vertex();
  const JoinTree two = join_decompose(small, 2);
  EXPECT_EQ(two.join_count(), 2u);
  EXPECT_TRUE(verify_join_tree(small, two, 2));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Multigraph g = generate_k_maximal(5, 2, seed);
    const JoinTree t = join_decompose(g, 2);
    EXPECT_EQ(t.leaf_count(), 5u);
    EXPECT_EQ(t.join_count(), 4u);
    for (const auto& x : t.nodes)
      if (!x.is_leaf()) EXPECT_EQ(x.join_edges.size(), 2u);
    EXPECT_TRUE(isomorphic(assemble(t, g).graph, g));
  }

  try {
    join_decompose(cycle(4), 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_k_maximal);
  }
}

TEST(JoinTreeVerifier, RejectsTamperedTrees) {
  const Multigraph g = generate_k_maximal(6, 2, 3);
  JoinTree t = join_decompose(g, 2);
  std::string why;
  ASSERT_TRUE(verify_join_tree(g, t, 2, &why)) << why;
  JoinTree wrong_k = t;
  EXPECT_FALSE(verify_join_tree(g, wrong_k, 3, &why));
  for (auto& x : t.nodes)
    if (!x.is_leaf()) {
      x.join_edges.pop_back();
      break;
    }
  EXPECT_FALSE(verify_join_tree(g, t, 2, &why));
}

TEST(Properties, GeneratorRoundTrip) {
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::uint64_t seed : {0u, 7u, 2024u}) {
        const Multigraph g = generate_k_maximal(n, k, seed);
        EXPECT_EQ(g.edge_count(), k * (n - 1));
        EXPECT_TRUE(is_k_maximal(g, k).flag) << "n=" << n << " k=" << k << " seed=" << seed;
      }
}

TEST(Properties, ReassemblyIsIsomorphic) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const Multigraph g = generate_k_maximal(n, k, 100 + n);
      const JoinTree t = join_decompose(g, k);
      EXPECT_TRUE(verify_join_tree(g, t, k));
      EXPECT_TRUE(isomorphic(assemble(t, g).graph, g));
    }
}

TEST(Properties, KMaximalGraphsHaveKappaEqualKappaBar) {
  for (const Multigraph& g : exhaustive_corpus(4, 7))
    for (std::size_t k = 1; k <= 3; ++k)
      if (is_k_maximal(g, k).flag) {
        EXPECT_EQ(kappa_prime(g).value, k);
        EXPECT_EQ(kappa_bar(g).value, k);
      }
}

TEST(Properties, AgreesWithDefinitionOfMaximality) {
  for (const Multigraph& g : exhaustive_corpus(4, 7))
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(is_k_maximal(g, k).flag, oracle::brute_k_maximal(g, k));
}

TEST(Canonical, DistinguishesAndIdentifies) {
  const Multigraph a(3, {{0, 1}, {0, 1}, {1, 2}});
  const Multigraph b(3, {{2, 0}, {1, 2}, {2, 1}});
  const Multigraph c(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
  EXPECT_THROW(canonical_form(path(11)), error);
}
