#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strength/certificates.hpp"
#include "strength/error.hpp"
#include "strength/invariants.hpp"
#include "strength/multigraph.hpp"
#include "strength/packing.hpp"

namespace strength {

/// Membership proof for F_k: a k-edge cut and eta = d = gamma = k.
struct FkCertificate {
  EdgeCut cut;
  Rational eta;
  Rational density;
  Rational gamma;
};

struct FkRefutation {
  enum class Reason { wrong_cut_size, density_not_k, not_uniformly_dense };

  Reason reason;
  std::string message;
  std::optional<EdgeCut> cut;                          // wrong_cut_size
  std::optional<std::vector<VertexId>> dense_subgraph;  // not_uniformly_dense: d(H) = gamma > d
  std::optional<PartitionCertificate> partition;       // not_uniformly_dense: ratio = eta < d
};

struct FkVerdict {
  bool flag = false;
  std::optional<FkCertificate> certificate;
  std::optional<FkRefutation> refutation;
};

/// G is in F_k iff it has a k-edge cut and is uniformly dense with density k.
inline FkVerdict is_in_Fk(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "is_in_Fk");
  detail::require_two_vertices(g, "is_in_Fk");
  const auto kk = static_cast<std::int64_t>(k);
  FkVerdict out;
  CutValue cut = kappa_prime(g);
  if (cut.value != k) {
    out.refutation = FkRefutation{FkRefutation::Reason::wrong_cut_size,
                                  "kappa'=" + std::to_string(cut.value) + " != k", std::move(cut.witness), {}, {}};
    return out;
  }
  const Rational d = density(g);
  if (d != Rational(kk)) {
    out.refutation = FkRefutation{FkRefutation::Reason::density_not_k, "d=" + d.to_string() + " != k", {}, {}, {}};
    return out;
  }
  DensityValue dense = gamma(g);
  auto [strength_value, partition] = eta(g);
  if (dense.value != d || strength_value != d) {
    out.refutation = FkRefutation{FkRefutation::Reason::not_uniformly_dense,
                                  "gamma=" + dense.value.to_string() + ", eta=" + strength_value.to_string() +
                                      " differ from d=" + d.to_string(),
                                  {}, std::move(dense.witness), std::move(partition)};
    return out;
  }
  out.flag = true;
  out.certificate = FkCertificate{std::move(cut.witness), strength_value, d, dense.value};
  return out;
}

/// Recursive split of an F_k member into pieces from K(k) (kappa' > eta =
/// d = k) or K1, joined pairwise by k-edge sets. The pieces sit at the
/// leaves of a binary join tree.
struct KkDecomposition {
  static constexpr std::size_t npos = SIZE_MAX;

  struct Node {
    std::size_t piece = npos;  // leaves only
    std::size_t left = npos;
    std::size_t right = npos;
    std::vector<EdgeId> join_edges;

    bool is_leaf() const { return left == npos; }
  };

  std::vector<Subgraph> pieces;  // induced subgraphs of the decomposed graph
  std::vector<Node> nodes;
  std::size_t root = npos;

  /// Join sets in the order they are applied when folding (post-order).
  std::vector<std::vector<EdgeId>> joins() const {
    std::vector<std::vector<EdgeId>> out;
    for (const auto& x : nodes)
      if (!x.is_leaf()) out.push_back(x.join_edges);
    return out;
  }

  std::vector<VertexId> vertices(std::size_t i) const {
    if (nodes[i].is_leaf()) return pieces[nodes[i].piece].vertex_origin;
    auto out = vertices(nodes[i].left);
    auto right = vertices(nodes[i].right);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
};

namespace detail {

// Checks K(k) membership of a piece with kappa' > k; empty string if fine.
inline std::string kk_piece_problem(const Multigraph& h, std::size_t k) {
  if (h.vertex_count() == 1) return {};
  const Rational target(static_cast<std::int64_t>(k));
  const Rational d = density(h);
  if (d != target) return "piece with d=" + d.to_string() + " != k";
  const Rational e = eta(h).first;
  if (e != target) return "piece with eta=" + e.to_string() + " != k";
  return {};
}

inline std::size_t decompose_rec(const Subgraph& piece, std::size_t k, KkDecomposition& out) {
  KkDecomposition::Node node;
  const Multigraph& h = piece.graph;
  std::optional<CutValue> cut;
  if (h.vertex_count() > 1) {
    cut = kappa_prime(h);
    if (cut->value < k)
      throw error(error_kind::not_in_fk, "piece with kappa'=" + std::to_string(cut->value) + " < k");
  }
  if (!cut || cut->value > k) {
    if (const std::string problem = kk_piece_problem(h, k); !problem.empty()) throw error(error_kind::not_in_fk, problem);
    node.piece = out.pieces.size();
    out.pieces.push_back(piece);
    out.nodes.push_back(std::move(node));
    return out.nodes.size() - 1;
  }
  node.join_edges = map_ids(cut->witness.cut_edges, piece.edge_origin);
  std::sort(node.join_edges.begin(), node.join_edges.end());
  std::size_t halves[2];
  int i = 0;
  for (const auto& side : {cut->witness.side, complement(h.vertex_count(), cut->witness.side)}) {
    Subgraph local = induced(h, side);
    Subgraph lifted{std::move(local.graph), map_ids(local.vertex_origin, piece.vertex_origin),
                    map_ids(local.edge_origin, piece.edge_origin)};
    halves[i++] = decompose_rec(lifted, k, out);
  }
  node.left = halves[0];
  node.right = halves[1];
  out.nodes.push_back(std::move(node));
  return out.nodes.size() - 1;
}

}  // namespace detail

/// Splits along k-edge cuts until every piece is K1 or has kappa' > k, and
/// checks each such piece has eta = d = k. Fails with NotInFk otherwise,
/// including when the graph has no k-edge cut at all.
inline KkDecomposition decompose_Fk(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "decompose_Fk");
  detail::require_two_vertices(g, "decompose_Fk");
  const std::size_t top = kappa_prime(g).value;
  if (top != k) throw error(error_kind::not_in_fk, "kappa'=" + std::to_string(top) + " != k");
  KkDecomposition out;
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) edges.push_back(EdgeId(i));
  out.root = detail::decompose_rec(Subgraph{g, all_vertices(g), std::move(edges)}, k, out);
  return out;
}

/// Pieces partition V and are K1 or in K(k); node joins are exactly the k
/// edges between their halves; no edge is left over.
inline bool verify_kk_decomposition(const Multigraph& g, const KkDecomposition& dec, std::size_t k,
                                    std::string* why = nullptr) {
  if (dec.root >= dec.nodes.size()) return detail::fail(why, "decomposition without a root");
  auto all = dec.vertices(dec.root);
  std::sort(all.begin(), all.end());
  if (all != all_vertices(g)) return detail::fail(why, "pieces do not partition the vertices");
  std::size_t covered = 0;
  for (const auto& piece : dec.pieces) {
    const Subgraph fresh = induced(g, piece.vertex_origin);
    if (!(fresh.graph == piece.graph)) return detail::fail(why, "piece is not the induced subgraph on its vertices");
    if (piece.graph.vertex_count() > 1) {
      if (!is_connected(piece.graph) || kappa_prime(piece.graph).value <= k) return detail::fail(why, "piece with kappa' <= k");
      if (const std::string problem = detail::kk_piece_problem(piece.graph, k); !problem.empty())
        return detail::fail(why, problem);
    }
    covered += piece.graph.edge_count();
  }
  for (const auto& x : dec.nodes) {
    if (x.is_leaf()) continue;
    if (x.join_edges.size() != k) return detail::fail(why, "join of wrong size");
    const auto left = membership(g.vertex_count(), dec.vertices(x.left));
    const auto right = membership(g.vertex_count(), dec.vertices(x.right));
    std::vector<EdgeId> between;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      if ((left[e.u.index] && right[e.v.index]) || (left[e.v.index] && right[e.u.index])) between.push_back(EdgeId(i));
    }
    if (detail::sorted(x.join_edges) != between) return detail::fail(why, "join set differs from the edges between halves");
    covered += k;
  }
  if (covered != g.edge_count()) return detail::fail(why, "edges outside pieces and joins");
  return true;
}

struct EqualityVerdict {
  bool flag = false;
  std::optional<Subgraph> witness;  // spanning subgraph of g in F_{k,n}
  std::optional<EdgeCut> cut;       // the k-edge cut the witness is built on
  std::string reason;
};

/// kappa' = tau = k. When true, the witness keeps a minimum cut X plus k
/// edge-disjoint spanning trees on each side of it.
inline EqualityVerdict kappa_eq_tau(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "kappa_eq_tau");
  detail::require_two_vertices(g, "kappa_eq_tau");
  EqualityVerdict out;
  CutValue cut = kappa_prime(g);
  if (cut.value != k) {
    out.reason = "kappa'=" + std::to_string(cut.value) + " != k";
    return out;
  }
  const PackingNumber t = tau(g);
  if (t.value() != static_cast<std::int64_t>(k)) {
    out.reason = "tau=" + t.to_string() + " != k";
    return out;
  }
  std::vector<EdgeId> keep = cut.witness.cut_edges;
  for (const auto& side : {cut.witness.side, complement(g.vertex_count(), cut.witness.side)}) {
    if (side.size() < 2) continue;
    const Subgraph part = induced(g, side);
    const PackingOutcome packing = extract_tree_packing(part.graph, k);
    const auto* trees = std::get_if<TreePacking>(&packing);
    if (!trees) throw std::logic_error("kappa_eq_tau: side of a k-cut without k spanning trees");
    for (const auto& tree : trees->trees)
      for (EdgeId e : tree) keep.push_back(part.edge_origin[e.index]);
  }
  out.flag = true;
  out.witness = keep_edges(g, keep);
  out.cut = std::move(cut.witness);
  return out;
}

}  // namespace strength
