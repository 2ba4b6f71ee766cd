#include <gtest/gtest.h>

#include "strength/canonical.hpp"
#include "strength/certificates.hpp"
#include "strength/oracles.hpp"
#include "strength/packing.hpp"
#include "strength/strength_equality.hpp"
#include "support/fixtures.hpp"

using namespace strength;
using namespace strength::fixtures;

namespace {

// 2K2 *2 2K2 on 4 vertices, 6 edges.
Multigraph h_graph() { return doubled_pairs_joined(2); }

Multigraph fold(const KkDecomposition& d, const Multigraph& g, std::size_t node) {
  const auto& x = d.nodes[node];
  if (x.is_leaf()) return d.pieces[x.piece].graph;
  const auto left = d.vertices(x.left), right = d.vertices(x.right);
  auto local = [](const std::vector<VertexId>& order, VertexId v) {
    return VertexId(static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin()));
  };
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId e : x.join_edges) {
    Edge edge = g.edge(e);
    if (std::find(left.begin(), left.end(), edge.u) == left.end()) std::swap(edge.u, edge.v);
    pairs.emplace_back(local(left, edge.u), local(right, edge.v));
  }
  return k_edge_join(fold(d, g, x.left), fold(d, g, x.right), pairs).graph;
}

}  // namespace

TEST(KkPieceExample, KFourIsInK2ButTheSuggestedTriangleIsNot) {
  // Triangle with one doubled edge: kappa' = 2, so it is not a K(2) piece.
  const Multigraph triangle(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(oracle::brute_min_cut(triangle).value, 2u);
  const Multigraph k4 = complete(4);
  EXPECT_EQ(oracle::brute_min_cut(k4).value, 3u);
  EXPECT_EQ(oracle::brute_eta(k4).first, Rational(2));
  EXPECT_EQ(density(k4), Rational(2));
  EXPECT_EQ(oracle::brute_gamma(k4).first, Rational(2));
}

TEST(IsInFk, Examples) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const FkVerdict v = is_in_Fk(parallel(k), k);
    EXPECT_TRUE(v.flag);
    EXPECT_EQ(v.certificate->cut.size(), k);
  }
  const FkVerdict h = is_in_Fk(h_graph(), 2);
  ASSERT_TRUE(h.flag);
  EXPECT_EQ(h.certificate->eta, Rational(2));
  EXPECT_EQ(h.certificate->gamma, Rational(2));
  EXPECT_TRUE(verify_edge_cut(h_graph(), h.certificate->cut));

  const FkVerdict k4 = is_in_Fk(complete(4), 2);
  EXPECT_FALSE(k4.flag);
  ASSERT_TRUE(k4.refutation);
  EXPECT_EQ(k4.refutation->reason, FkRefutation::Reason::wrong_cut_size);
  EXPECT_EQ(k4.refutation->cut->size(), 3u);
}

TEST(IsInFk, RefutationsCarryWitnesses) {
  const FkVerdict sparse = is_in_Fk(cycle(4), 2);
  EXPECT_EQ(sparse.refutation->reason, FkRefutation::Reason::density_not_k);

  // kappa' = 2 and d = 2 but the K4 with a doubled edge is denser than the whole.
  const Multigraph lumpy(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}, {3, 4}, {4, 5}, {5, 0}});
  ASSERT_EQ(kappa_prime(lumpy).value, 2u);
  ASSERT_EQ(density(lumpy), Rational(2));
  const FkVerdict v = is_in_Fk(lumpy, 2);
  ASSERT_FALSE(v.flag);
  EXPECT_EQ(v.refutation->reason, FkRefutation::Reason::not_uniformly_dense);
  EXPECT_GT(density(induced(lumpy, *v.refutation->dense_subgraph).graph), Rational(2));
  EXPECT_LT(v.refutation->partition->ratio, Rational(2));
  EXPECT_TRUE(verify_partition(lumpy, *v.refutation->partition));

  EXPECT_THROW(is_in_Fk(two_disjoint_k2(), 1), error);
}

TEST(DecomposeFk, Examples) {
  const KkDecomposition kk2 = decompose_Fk(parallel(3), 3);
  EXPECT_EQ(kk2.pieces.size(), 2u);
  EXPECT_EQ(kk2.joins().size(), 1u);

  const KkDecomposition h = decompose_Fk(h_graph(), 2);
  EXPECT_EQ(h.pieces.size(), 4u);
  EXPECT_EQ(h.joins().size(), 3u);
  for (const auto& piece : h.pieces) EXPECT_EQ(piece.graph.vertex_count(), 1u);
  EXPECT_TRUE(verify_kk_decomposition(h_graph(), h, 2));

  const Multigraph g = k4_join_vertex();
  const KkDecomposition d = decompose_Fk(g, 2);
  ASSERT_EQ(d.pieces.size(), 2u);
  std::vector<std::size_t> sizes{d.pieces[0].graph.vertex_count(), d.pieces[1].graph.vertex_count()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4}));
  EXPECT_TRUE(verify_kk_decomposition(g, d, 2));
  EXPECT_TRUE(isomorphic(fold(d, g, d.root), g));
}

TEST(DecomposeFk, RejectsNonMembers) {
  for (const auto& g : {complete(4), cycle(4), cycle(5)}) {
    try {
      decompose_Fk(g, 2);
      FAIL();
    } catch (const error& e) {
      EXPECT_EQ(e.kind(), error_kind::not_in_fk);
    }
  }
}

TEST(KappaEqTau, Examples) {
  const EqualityVerdict h = kappa_eq_tau(h_graph(), 2);
  ASSERT_TRUE(h.flag);
  EXPECT_EQ(h.witness->graph.edge_count(), 6u);
  EXPECT_TRUE(verify_spanning_subgraph(h_graph(), *h.witness));

  const Multigraph extra = h_graph().with_edges(std::vector<VertexPair>{{0, 2}});
  const EqualityVerdict more = kappa_eq_tau(extra, 2);
  EXPECT_FALSE(more.flag);
  EXPECT_EQ(kappa_prime(extra).value, 3u);
  EXPECT_EQ(tau(extra), PackingNumber(2));

  for (const auto& tree : {path(5), star(6)}) {
    const EqualityVerdict t = kappa_eq_tau(tree, 1);
    ASSERT_TRUE(t.flag);
    EXPECT_EQ(t.witness->graph, tree);
  }
  EXPECT_THROW(kappa_eq_tau(two_disjoint_k2(), 1), error);
}

TEST(Properties, MembershipMatchesDecompositionAndDefinition) {
  for (const Multigraph& g : exhaustive_corpus(5, 8))
    for (std::size_t k = 1; k <= 3; ++k) {
      const bool member = is_in_Fk(g, k).flag;
      EXPECT_EQ(member, oracle::brute_in_Fk(g, k));
      bool decomposed = true;
      try {
        const KkDecomposition d = decompose_Fk(g, k);
        std::string why;
        EXPECT_TRUE(verify_kk_decomposition(g, d, k, &why)) << why;
        for (const auto& piece : d.pieces)
          if (piece.graph.vertex_count() > 1) {
            EXPECT_GT(kappa_prime(piece.graph).value, k);
            EXPECT_EQ(eta(piece.graph).first, Rational(static_cast<std::int64_t>(k)));
            EXPECT_EQ(density(piece.graph), Rational(static_cast<std::int64_t>(k)));
          }
      } catch (const error& e) {
        ASSERT_EQ(e.kind(), error_kind::not_in_fk);
        decomposed = false;
      }
      EXPECT_EQ(member, decomposed);
    }
}

TEST(Properties, MembersAreMinimal) {
  for (const Multigraph& g : exhaustive_corpus(5, 8))
    for (std::size_t k = 1; k <= 3; ++k)
      if (is_in_Fk(g, k).flag) {
        EXPECT_TRUE(removable_edges(g, k).empty());
        EXPECT_EQ(g.edge_count(), k * (g.vertex_count() - 1));
      }
}

TEST(Properties, KappaTauWitnessIsSpanningMember) {
  for (const Multigraph& g : random_corpus(200, 59, 7, 3)) {
    const std::size_t k = kappa_prime(g).value;
    const EqualityVerdict v = kappa_eq_tau(g, k);
    EXPECT_EQ(v.flag, tau(g).value() == static_cast<std::int64_t>(k));
    if (!v.flag) continue;
    EXPECT_TRUE(verify_spanning_subgraph(g, *v.witness));
    EXPECT_TRUE(is_in_Fk(v.witness->graph, k).flag);
  }
}
