#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strength/error.hpp"
#include "strength/invariants.hpp"
#include "strength/multigraph.hpp"
#include "strength/packing.hpp"

namespace strength {

struct ReinforcementPlan {
  std::vector<VertexPair> added_edges;  // appended after the edges of g, in this order
  TreePacking resulting_packing;        // edge ids of apply_plan(g, plan)
};

inline Multigraph apply_plan(const Multigraph& g, const ReinforcementPlan& plan) { return g.with_edges(plan.added_edges); }

/// Adds k(n-1) - m edges so the result splits into k spanning trees.
/// Candidates are vertex pairs in lexicographic order, parallel edges
/// allowed; a pair is taken whenever it stays independent in the union of k
/// forests. Independence of the edge set is exactly gamma <= k, so the
/// graph keeps gamma <= k after every step. A pair that fails once fails for
/// good (the span only grows), which lets the scan move forward.
inline ReinforcementPlan reinforce_to_k_trees(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "reinforce_to_k_trees");
  if (k == 0) throw error(error_kind::invalid_size, "k must be positive");
  const std::size_t n = g.vertex_count();
  const std::size_t target = k * (n - 1);
  ForestUnion fu(n, k);
  for (const auto& e : g.edges()) {
    if (!fu.offer(e.u.index, e.v.index))
      throw error(error_kind::gamma_too_large, "gamma=" + gamma(g).value.to_string() + " > k");
  }
  ReinforcementPlan plan;
  std::size_t u = 0, v = 1;
  while (fu.assigned() < target) {
    if (u + 1 >= n) throw std::logic_error("reinforce_to_k_trees: ran out of candidate pairs");
    if (fu.offer(u, v)) {
      plan.added_edges.emplace_back(u, v);
      continue;
    }
    fu.drop_last();
    if (++v == n) v = ++u + 1;
  }
  plan.resulting_packing = TreePacking{fu.forests()};
  return plan;
}

/// Spanning subgraph in F_{k,n}, or the reason none exists.
struct RestrictionVerdict {
  bool flag = false;
  std::optional<Subgraph> witness;
  std::optional<EdgeCut> cut;  // the cut X of g the witness keeps k edges of
  std::string reason;
};

/// Some cut X with |X| >= k has both sides K1 or connected with tau >= k.
/// Bipartitions are enumerated exhaustively (n <= 20); the witness keeps the
/// first k edges of X plus k spanning trees per side.
inline RestrictionVerdict restriction_exists(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "restriction_exists");
  if (k == 0) throw error(error_kind::invalid_size, "k must be positive");
  const std::size_t n = g.vertex_count();
  RestrictionVerdict out;
  if (n == 1) {
    out.reason = "single vertex has no edge cut";
    return out;
  }
  if (n > 20) throw error(error_kind::too_large, "restriction_exists enumerates bipartitions of at most 20 vertices");
  if (g.edge_count() < k * (n - 1)) {
    out.reason = "fewer than k(n-1) edges";
    return out;
  }
  std::map<std::uint32_t, std::optional<TreePacking>> side_trees;
  auto trees_of = [&](std::uint32_t mask) -> const std::optional<TreePacking>& {
    auto it = side_trees.find(mask);
    if (it != side_trees.end()) return it->second;
    std::vector<VertexId> side;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) side.push_back(VertexId(v));
    std::optional<TreePacking> found;
    if (side.size() == 1) {
      found = TreePacking{std::vector<std::vector<EdgeId>>(k)};
    } else {
      const Subgraph part = induced(g, side);
      if (is_connected(part.graph)) {
        PackingOutcome packing = extract_tree_packing(part.graph, k);
        if (auto* trees = std::get_if<TreePacking>(&packing)) {
          for (auto& tree : trees->trees)
            for (EdgeId& e : tree) e = part.edge_origin[e.index];
          found = std::move(*trees);
        }
      }
    }
    return side_trees.emplace(mask, std::move(found)).first->second;
  };
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<VertexId> side;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) side.push_back(VertexId(v));
    std::vector<EdgeId> cross = crossing_edges(g, side);
    if (cross.size() < k) continue;
    const auto& left = trees_of(mask);
    if (!left) continue;
    const auto& right = trees_of(full & ~mask);
    if (!right) continue;
    std::vector<EdgeId> keep(cross.begin(), cross.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto* packing : {&*left, &*right})
      for (const auto& tree : packing->trees) keep.insert(keep.end(), tree.begin(), tree.end());
    out.flag = true;
    out.witness = keep_edges(g, keep);
    out.cut = EdgeCut{std::move(side), std::move(cross)};
    return out;
  }
  out.reason = "no cut of size >= k with both sides packing k spanning trees";
  return out;
}

/// A supergraph on the same vertices in F_{k,n} exists iff kappa' <= k and
/// gamma <= k.
inline bool extension_exists(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "extension_exists");
  detail::require_two_vertices(g, "extension_exists");
  return kappa_prime(g).value <= k && gamma(g).value <= Rational(static_cast<std::int64_t>(k));
}

/// Splits g along a minimum cut X, reinforces each side to k spanning trees
/// and tops X up to k edges with the lexicographically first pairs across
/// the same bipartition (cycling through them if more are needed). The
/// edges of g come first in the result, in their original order.
inline Multigraph build_extension(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "build_extension");
  detail::require_two_vertices(g, "build_extension");
  if (k == 0) throw error(error_kind::invalid_size, "k must be positive");
  const CutValue cut = kappa_prime(g);
  if (cut.value > k) throw error(error_kind::no_extension, "kappa'=" + std::to_string(cut.value) + " > k");
  const DensityValue dense = gamma(g);
  if (dense.value > Rational(static_cast<std::int64_t>(k)))
    throw error(error_kind::no_extension, "gamma=" + dense.value.to_string() + " > k");
  const std::size_t n = g.vertex_count();
  const std::vector<VertexId> sides[2] = {cut.witness.side, complement(n, cut.witness.side)};
  std::vector<VertexPair> added;
  for (const auto& side : sides) {
    if (side.size() < 2) continue;
    const Subgraph part = induced(g, side);
    for (const auto& [a, b] : reinforce_to_k_trees(part.graph, k).added_edges)
      added.emplace_back(part.vertex_origin[a].index, part.vertex_origin[b].index);
  }
  const auto in_first = membership(n, sides[0]);
  std::vector<VertexPair> across;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (in_first[u] != in_first[v]) across.emplace_back(u, v);
  for (std::size_t i = 0; i < k - cut.value; ++i) added.push_back(across[i % across.size()]);
  return g.with_edges(added);
}

}  // namespace strength
