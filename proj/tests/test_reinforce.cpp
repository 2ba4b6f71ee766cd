#include <gtest/gtest.h>

#include "strength/certificates.hpp"
#include "strength/oracles.hpp"
#include "strength/reinforce.hpp"
#include "strength/strength_equality.hpp"
#include "support/fixtures.hpp"

using namespace strength;
using namespace strength::fixtures;

namespace {

// g appears as a prefix of h: same vertices, first m edges identical.
bool contains_as_prefix(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count() != h.vertex_count() || h.edge_count() < g.edge_count()) return false;
  return std::equal(g.edges().begin(), g.edges().end(), h.edges().begin());
}

}  // namespace

TEST(RestrictionExists, Examples) {
  const Multigraph seven = doubled_pairs_joined(3);
  const RestrictionVerdict yes = restriction_exists(seven, 2);
  ASSERT_TRUE(yes.flag);
  EXPECT_EQ(yes.witness->graph.edge_count(), 6u);
  EXPECT_EQ(kappa_prime(yes.witness->graph).value, 2u);
  EXPECT_EQ(tau(yes.witness->graph), PackingNumber(2));
  EXPECT_TRUE(verify_spanning_subgraph(seven, *yes.witness));
  std::size_t kept_cut = 0;
  for (EdgeId e : yes.witness->edge_origin) kept_cut += e.index >= 4;
  EXPECT_EQ(kept_cut, 2u);

  EXPECT_FALSE(restriction_exists(complete(4), 2).flag);

  for (const auto& tree : {path(6), star(5)}) {
    const RestrictionVerdict t = restriction_exists(tree, 1);
    ASSERT_TRUE(t.flag);
    EXPECT_EQ(t.witness->graph, tree);
  }
  EXPECT_THROW(restriction_exists(two_disjoint_k2(), 1), error);
}

TEST(ExtensionExists, Examples) {
  EXPECT_TRUE(extension_exists(cycle(4), 2));
  EXPECT_FALSE(extension_exists(complete(4), 2));
  EXPECT_FALSE(extension_exists(parallel(3), 2));
  EXPECT_THROW(extension_exists(two_disjoint_k2(), 2), error);
}

TEST(BuildExtension, Examples) {
  const Multigraph c4 = cycle(4);
  const Multigraph h = build_extension(c4, 2);
  EXPECT_EQ(h.edge_count(), 6u);
  EXPECT_TRUE(contains_as_prefix(c4, h));
  EXPECT_TRUE(is_in_Fk(h, 2).flag);

  EXPECT_EQ(build_extension(path(3), 1), path(3));

  const Multigraph tt = two_triangles_edge();
  const Multigraph big = build_extension(tt, 2);
  EXPECT_EQ(big.edge_count(), 10u);
  EXPECT_TRUE(contains_as_prefix(tt, big));
  EXPECT_EQ(kappa_prime(big).value, 2u);
  EXPECT_EQ(tau(big), PackingNumber(2));
  EXPECT_TRUE(std::holds_alternative<TreePacking>(extract_tree_packing(big, 2)));

  try {
    build_extension(complete(4), 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::no_extension);
  }
}

TEST(ReinforceToKTrees, Examples) {
  const ReinforcementPlan k2 = reinforce_to_k_trees(parallel(1), 2);
  EXPECT_EQ(k2.added_edges, (std::vector<VertexPair>{{0, 1}}));
  EXPECT_TRUE(verify_decomposition(apply_plan(parallel(1), k2), k2.resulting_packing, 2));

  const ReinforcementPlan c4 = reinforce_to_k_trees(cycle(4), 2);
  EXPECT_EQ(c4.added_edges.size(), 2u);
  EXPECT_TRUE(verify_decomposition(apply_plan(cycle(4), c4), c4.resulting_packing, 2));

  EXPECT_TRUE(reinforce_to_k_trees(star(5), 1).added_edges.empty());

  try {
    reinforce_to_k_trees(parallel(3), 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::gamma_too_large);
  }
}

TEST(Properties, ReinforcementCountAndDecomposition) {
  for (const Multigraph& g : random_corpus(300, 61, 8, 2))
    for (std::size_t k = 1; k <= 3; ++k) {
      if (gamma(g).value > Rational(static_cast<std::int64_t>(k))) {
        EXPECT_THROW(reinforce_to_k_trees(g, k), error);
        continue;
      }
      const ReinforcementPlan plan = reinforce_to_k_trees(g, k);
      EXPECT_EQ(plan.added_edges.size(), k * (g.vertex_count() - 1) - g.edge_count());
      std::string why;
      EXPECT_TRUE(verify_decomposition(apply_plan(g, plan), plan.resulting_packing, k, &why)) << why;
    }
}

TEST(Properties, ReinforcementKeepsGammaBoundedAtEveryStep) {
  for (const Multigraph& g : random_corpus(60, 67, 6, 2))
    for (std::size_t k = 1; k <= 3; ++k) {
      if (gamma(g).value > Rational(static_cast<std::int64_t>(k))) continue;
      const ReinforcementPlan plan = reinforce_to_k_trees(g, k);
      std::vector<VertexPair> prefix;
      for (const auto& p : plan.added_edges) {
        prefix.push_back(p);
        EXPECT_LE(oracle::brute_gamma(g.with_edges(prefix)).first, Rational(static_cast<std::int64_t>(k)));
      }
    }
}

TEST(Properties, RestrictionAgreesWithSubgraphSearch) {
  for (const Multigraph& g : exhaustive_corpus(5, 8))
    for (std::size_t k = 1; k <= 2; ++k) {
      const RestrictionVerdict v = restriction_exists(g, k);
      EXPECT_EQ(v.flag, oracle::brute_restriction(g, k).has_value());
      if (!v.flag) continue;
      EXPECT_TRUE(verify_spanning_subgraph(g, *v.witness));
      EXPECT_TRUE(oracle::brute_in_Fk(v.witness->graph, k));
    }
}

TEST(Properties, ExtensionAgreesWithSupergraphSearch) {
  for (const Multigraph& g : exhaustive_corpus(4, 8))
    for (std::size_t k = 1; k <= 2; ++k) {
      const bool exists = extension_exists(g, k);
      EXPECT_EQ(exists, oracle::brute_extension(g, k).has_value());
      if (!exists) continue;
      const Multigraph h = build_extension(g, k);
      EXPECT_TRUE(contains_as_prefix(g, h));
      EXPECT_EQ(h.edge_count(), k * (g.vertex_count() - 1));
      EXPECT_TRUE(is_in_Fk(h, k).flag);
    }
}
