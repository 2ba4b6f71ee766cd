#pragma once

// Independent checkers for every witness the library emits. Each returns
// false and fills `why` (when given) on the first problem found.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "strength/multigraph.hpp"
#include "strength/partition.hpp"

namespace strength {

namespace detail {

inline bool fail(std::string* why, std::string reason) {
  if (why) *why = std::move(reason);
  return false;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

inline std::vector<EdgeId> sorted(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace detail

inline bool verify_edge_cut(const Multigraph& g, const EdgeCut& cut, std::string* why = nullptr) {
  const std::size_t n = g.vertex_count();
  if (cut.side.empty() || cut.side.size() >= n) return detail::fail(why, "cut side must be a proper nonempty subset");
  std::vector<bool> in(n, false);
  for (VertexId v : cut.side) {
    if (v.index >= n) return detail::fail(why, "cut side names vertex " + std::to_string(v.index));
    if (in[v.index]) return detail::fail(why, "cut side repeats vertex " + std::to_string(v.index));
    in[v.index] = true;
  }
  if (detail::sorted(cut.cut_edges) != detail::sorted(crossing_edges(g, cut.side)))
    return detail::fail(why, "cut edges differ from the edges crossing the side");
  return true;
}

inline bool verify_partition(const Multigraph& g, const PartitionCertificate& cert, std::string* why = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> part_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    if (cert.parts[i].empty()) return detail::fail(why, "empty part");
    for (VertexId v : cert.parts[i]) {
      if (v.index >= n) return detail::fail(why, "part names vertex " + std::to_string(v.index));
      if (part_of[v.index] != SIZE_MAX) return detail::fail(why, "vertex " + std::to_string(v.index) + " in two parts");
      part_of[v.index] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (part_of[v] == SIZE_MAX) return detail::fail(why, "vertex " + std::to_string(v) + " not covered");
  std::vector<EdgeId> crossing;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (part_of[g.edges()[i].u.index] != part_of[g.edges()[i].v.index]) crossing.push_back(EdgeId(i));
  if (detail::sorted(cert.crossing) != crossing) return detail::fail(why, "crossing set does not match the parts");
  const std::size_t omega = components(g).count;
  if (cert.parts.size() > omega) {
    const Rational ratio(static_cast<std::int64_t>(crossing.size()), static_cast<std::int64_t>(cert.parts.size() - omega));
    if (ratio != cert.ratio) return detail::fail(why, "ratio " + cert.ratio.to_string() + " should be " + ratio.to_string());
  }
  return true;
}

/// The partition violates the Nash-Williams/Tutte condition for k trees.
inline bool verify_deficiency(const Multigraph& g, const PartitionCertificate& cert, std::size_t k,
                              std::string* why = nullptr) {
  if (!verify_partition(g, cert, why)) return false;
  if (cert.parts.size() < 2 || cert.crossing.size() >= k * (cert.parts.size() - 1))
    return detail::fail(why, std::to_string(cert.crossing.size()) + " crossing edges do not fall below k(|P|-1)");
  return true;
}

inline bool verify_tree_packing(const Multigraph& g, const TreePacking& packing, std::size_t k,
                                std::string* why = nullptr) {
  const std::size_t n = g.vertex_count();
  if (packing.size() != k)
    return detail::fail(why, "expected " + std::to_string(k) + " trees, got " + std::to_string(packing.size()));
  std::vector<bool> used(g.edge_count(), false);
  for (std::size_t t = 0; t < packing.size(); ++t) {
    const auto& tree = packing.trees[t];
    if (tree.size() + 1 != n) return detail::fail(why, "tree " + std::to_string(t) + " has " + std::to_string(tree.size()) + " edges");
    detail::DisjointSets sets(n);
    for (EdgeId e : tree) {
      if (e.index >= g.edge_count()) return detail::fail(why, "tree names edge " + std::to_string(e.index));
      if (used[e.index]) return detail::fail(why, "edge " + std::to_string(e.index) + " used twice");
      used[e.index] = true;
      if (!sets.unite(g.edges()[e.index].u.index, g.edges()[e.index].v.index))
        return detail::fail(why, "tree " + std::to_string(t) + " has a cycle");
    }
  }
  return true;
}

/// Packing that uses every edge exactly once.
inline bool verify_decomposition(const Multigraph& g, const TreePacking& packing, std::size_t k,
                                 std::string* why = nullptr) {
  if (!verify_tree_packing(g, packing, k, why)) return false;
  std::size_t total = 0;
  for (const auto& t : packing.trees) total += t.size();
  if (total != g.edge_count()) return detail::fail(why, "packing leaves edges unused");
  return true;
}

/// `sub` (from keep_edges/delete_edges on `g`) is a spanning subgraph of g.
inline bool verify_spanning_subgraph(const Multigraph& g, const Subgraph& sub, std::string* why = nullptr) {
  if (sub.graph.vertex_count() != g.vertex_count()) return detail::fail(why, "subgraph is not spanning");
  if (sub.edge_origin.size() != sub.graph.edge_count()) return detail::fail(why, "edge origin table size");
  std::vector<bool> used(g.edge_count(), false);
  for (std::size_t i = 0; i < sub.edge_origin.size(); ++i) {
    const EdgeId o = sub.edge_origin[i];
    if (o.index >= g.edge_count() || used[o.index]) return detail::fail(why, "bad edge origin");
    used[o.index] = true;
    const Edge& a = sub.graph.edges()[i];
    const Edge& b = g.edges()[o.index];
    if (!((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))) return detail::fail(why, "edge endpoints differ");
  }
  return true;
}

}  // namespace strength
