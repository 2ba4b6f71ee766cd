#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strength/error.hpp"
#include "strength/flow.hpp"
#include "strength/multigraph.hpp"
#include "strength/partition.hpp"
#include "strength/rational.hpp"

namespace strength {

/// Union of k graphic matroids, maintained as k edge-disjoint forests.
/// New edges are inserted by shortest augmenting paths in the exchange
/// graph; an edge that cannot be inserted stays unassigned. Edge ids are the
/// order in which edges were offered.
class ForestUnion {
 public:
  static constexpr std::size_t none = SIZE_MAX;

  ForestUnion(std::size_t n, std::size_t k) : n_(n), k_(k), adjacency_(k, std::vector<std::vector<Link>>(n)) {}

  std::size_t forest_count() const { return k_; }
  std::size_t assigned() const { return assigned_; }
  std::size_t offered() const { return edges_.size(); }

  std::size_t owner(EdgeId e) const { return owner_.at(e.index); }

  /// Offers a new edge; true if it now lies in some forest.
  bool offer(std::size_t u, std::size_t v) {
    edges_.push_back({VertexId(u), VertexId(v)});
    owner_.push_back(none);
    return augment(edges_.size() - 1);
  }

  /// Forgets the most recently offered edge if it was left unassigned.
  void drop_last() {
    if (edges_.empty() || owner_.back() != none) throw std::logic_error("ForestUnion::drop_last on an assigned edge");
    edges_.pop_back();
    owner_.pop_back();
  }

  std::vector<std::vector<EdgeId>> forests() const {
    std::vector<std::vector<EdgeId>> out(k_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (owner_[e] != none) out[owner_[e]].push_back(EdgeId(e));
    return out;
  }

  /// Edges reachable in the exchange graph from the unassigned edges. Every
  /// forest restricted to this set spans it.
  std::vector<EdgeId> blocked_closure() const {
    std::vector<std::size_t> roots;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (owner_[e] == none) roots.push_back(e);
    Search search = explore(roots);
    if (search.sink != none) throw std::logic_error("ForestUnion: augmenting path left unused");
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (search.parent[e] != unlabeled) out.push_back(EdgeId(e));
    return out;
  }

 private:
  struct Link {
    std::size_t to;
    std::size_t edge;
  };

  static constexpr std::size_t unlabeled = SIZE_MAX;
  static constexpr std::size_t root = SIZE_MAX - 1;

  struct Search {
    std::vector<std::size_t> parent;
    std::size_t sink = none;
    std::size_t sink_forest = none;
  };

  // Edges of forest i on the path between a and b; nullopt if disconnected.
  std::optional<std::vector<std::size_t>> forest_path(std::size_t i, std::size_t a, std::size_t b) const {
    if (a == b) return std::vector<std::size_t>{};
    std::vector<std::size_t> via(n_, none);
    std::vector<bool> seen(n_, false);
    std::queue<std::size_t> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      if (x == b) break;
      for (const Link& link : adjacency_[i][x]) {
        if (seen[link.to]) continue;
        seen[link.to] = true;
        via[link.to] = link.edge;
        q.push(link.to);
      }
    }
    if (!seen[b]) return std::nullopt;
    std::vector<std::size_t> path;
    for (std::size_t x = b; x != a;) {
      const std::size_t e = via[x];
      path.push_back(e);
      x = edges_[e].other(VertexId(x)).index;
    }
    return path;
  }

  Search explore(const std::vector<std::size_t>& roots) const {
    Search s;
    s.parent.assign(edges_.size(), unlabeled);
    std::queue<std::size_t> q;
    for (std::size_t r : roots) {
      s.parent[r] = root;
      q.push(r);
    }
    while (!q.empty()) {
      const std::size_t f = q.front();
      q.pop();
      const std::size_t a = edges_[f].u.index, b = edges_[f].v.index;
      std::vector<std::vector<std::size_t>> cycles;
      for (std::size_t i = 0; i < k_; ++i) {
        if (owner_[f] == i) continue;
        auto path = forest_path(i, a, b);
        if (!path) {
          s.sink = f;
          s.sink_forest = i;
          return s;
        }
        cycles.push_back(std::move(*path));
      }
      for (const auto& cycle : cycles) {
        for (std::size_t g : cycle) {
          if (s.parent[g] != unlabeled) continue;
          s.parent[g] = f;
          q.push(g);
        }
      }
    }
    return s;
  }

  void link(std::size_t e, std::size_t forest) {
    const auto& edge = edges_[e];
    adjacency_[forest][edge.u.index].push_back({edge.v.index, e});
    adjacency_[forest][edge.v.index].push_back({edge.u.index, e});
    owner_[e] = forest;
  }

  void unlink(std::size_t e) {
    const std::size_t forest = owner_[e];
    const auto& edge = edges_[e];
    for (std::size_t end : {edge.u.index, edge.v.index}) {
      auto& list = adjacency_[forest][end];
      list.erase(std::find_if(list.begin(), list.end(), [e](const Link& l) { return l.edge == e; }));
    }
    owner_[e] = none;
  }

  bool augment(std::size_t e) {
    Search s = explore({e});
    if (s.sink == none) return false;
    std::size_t cur = s.sink, target = s.sink_forest;
    while (true) {
      const std::size_t previous = owner_[cur];
      if (previous != none) unlink(cur);
      link(cur, target);
      if (s.parent[cur] == root) break;
      cur = s.parent[cur];
      target = previous;
    }
    ++assigned_;
    return true;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::vector<Link>>> adjacency_;
  std::size_t assigned_ = 0;
};

namespace detail {

inline void require_connected(const Multigraph& g, const char* what) {
  if (!is_connected(g)) throw error(error_kind::disconnected, std::string(what) + " needs a connected graph");
}

// Components of (V, edges).
inline std::vector<std::vector<VertexId>> groups_of(std::size_t n, const std::vector<Edge>& all,
                                                    const std::vector<EdgeId>& edges) {
  std::vector<VertexPair> pairs;
  for (EdgeId e : edges) pairs.emplace_back(all[e.index].u.index, all[e.index].v.index);
  return components(Multigraph(n, pairs)).groups();
}

// Partition of the vertices of a connected graph minimising
// scale * |crossing(P)| - cost * |P|. Vertices are added one at a time; each
// new vertex merges with the subset of current parts found by one
// maximum-closure computation. An optimal partition of the first i vertices
// always extends to one of the first i+1 this way (submodularity of the
// objective on the partition lattice).
inline std::vector<std::vector<VertexId>> min_weighted_partition(const Multigraph& g, std::int64_t scale,
                                                                 std::int64_t cost) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> part_of(n, SIZE_MAX);
  std::vector<std::vector<VertexId>> parts{{VertexId(0)}};
  part_of[0] = 0;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t fresh = parts.size();
    part_of[v] = fresh;
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> weights;
    for (const auto& e : g.edges()) {
      const std::size_t a = e.u.index, b = e.v.index;
      if (a > v || b > v) continue;
      const std::size_t pa = part_of[a], pb = part_of[b];
      if (pa == pb) continue;
      ++weights[{std::min(pa, pb), std::max(pa, pb)}];
    }
    std::vector<WeightedPair> pairs;
    for (const auto& [key, w] : weights) pairs.push_back({key.first, key.second, w});
    const std::size_t forced[] = {fresh};
    const Closure closure = max_closure(fresh + 1, pairs, scale, cost, forced);

    std::vector<std::vector<VertexId>> next;
    std::vector<VertexId> merged{VertexId(v)};
    for (std::size_t p = 0; p < fresh; ++p) {
      if (closure.members[p])
        merged.insert(merged.end(), parts[p].begin(), parts[p].end());
      else
        next.push_back(std::move(parts[p]));
    }
    next.push_back(std::move(merged));
    parts = std::move(next);
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (VertexId w : parts[p]) part_of[w.index] = p;
  }
  return parts;
}

// Strength of a connected graph with at least two vertices, by Newton
// iteration on the ratio: each round either certifies the current ratio or
// finds a partition with a strictly smaller one.
inline std::pair<Rational, std::vector<std::vector<VertexId>>> connected_strength(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> best = singleton_parts(n);
  Rational ratio(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n - 1));
  while (true) {
    auto parts = min_weighted_partition(g, ratio.den(), ratio.num());
    const PartitionCertificate cert = make_partition(g, parts);
    const std::int64_t slack = ratio.den() * static_cast<std::int64_t>(cert.crossing.size()) -
                               ratio.num() * static_cast<std::int64_t>(cert.parts.size() - 1);
    if (slack >= 0) break;
    ratio = cert.ratio;
    best = std::move(cert.parts);
  }
  return {ratio, std::move(best)};
}

}  // namespace detail

/// Strength eta(G) = min |X| / (omega(G - X) - omega(G)), with an optimal
/// partition. On a disconnected graph the weakest nontrivial component
/// decides; the witness keeps every other component as a single part.
inline std::pair<Rational, PartitionCertificate> eta(const Multigraph& g) {
  const Components comps = components(g);
  if (g.vertex_count() == comps.count)
    throw error(error_kind::degenerate_denominator, "strength needs a component with two vertices");
  const auto groups = comps.groups();
  std::optional<Rational> best;
  std::vector<std::vector<VertexId>> best_parts;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() < 2) continue;
    const Subgraph piece = induced(g, groups[c]);
    auto [value, local] = detail::connected_strength(piece.graph);
    if (best && !(value < *best)) continue;
    best = value;
    best_parts.clear();
    for (const auto& part : local) best_parts.push_back(map_ids(part, piece.vertex_origin));
    for (std::size_t other = 0; other < groups.size(); ++other)
      if (other != c) best_parts.push_back(groups[other]);
  }
  PartitionCertificate cert = make_partition(g, std::move(best_parts));
  if (cert.ratio != *best) throw std::logic_error("eta: witness ratio mismatch");
  return {*best, std::move(cert)};
}

/// k edge-disjoint spanning trees, or a Nash-Williams/Tutte violator.
inline PackingOutcome extract_tree_packing(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "tree packing");
  if (k == 0) throw error(error_kind::invalid_size, "k must be positive");
  const std::size_t n = g.vertex_count();
  const std::size_t target = k * (n - 1);
  ForestUnion fu(n, k);
  for (const auto& e : g.edges()) {
    if (fu.assigned() == target) break;
    fu.offer(e.u.index, e.v.index);
  }
  if (fu.assigned() == target) return TreePacking{fu.forests()};
  // Every edge was offered, so the unassigned ones are dependent in the
  // union matroid and their closure yields the violating partition.
  auto parts = detail::groups_of(n, g.edges(), fu.blocked_closure());
  return make_partition(g, std::move(parts));
}

inline bool has_tree_packing(const Multigraph& g, std::size_t k) {
  return std::holds_alternative<TreePacking>(extract_tree_packing(g, k));
}

/// tau(G) = floor(eta(G)) for connected G; unbounded on K1. The value is
/// confirmed by an explicit packing of tau trees and a violator for tau + 1.
inline PackingNumber tau(const Multigraph& g) {
  detail::require_connected(g, "tau");
  if (g.vertex_count() == 1) return PackingNumber::unbounded();
  const std::int64_t t = eta(g).first.floor();
  if (t >= 1 && !has_tree_packing(g, static_cast<std::size_t>(t)))
    throw std::logic_error("tau: packing of floor(eta) trees not found");
  if (has_tree_packing(g, static_cast<std::size_t>(t + 1)))
    throw std::logic_error("tau: packing exceeds floor(eta)");
  return PackingNumber(t);
}

/// E_k(G): edges whose deletion keeps k edge-disjoint spanning trees.
inline std::vector<EdgeId> removable_edges(const Multigraph& g, std::size_t k) {
  detail::require_connected(g, "removable_edges");
  if (!has_tree_packing(g, k))
    throw error(error_kind::insufficient_packing, "tau < " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> out;
  if (n == 1) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) out.push_back(EdgeId(i));
    return out;
  }
  if (g.edge_count() - 1 < k * (n - 1)) return out;
  std::map<std::pair<std::size_t, std::size_t>, bool> by_pair;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const auto key = std::minmax(e.u.index, e.v.index);
    auto it = by_pair.find(key);
    if (it == by_pair.end()) {
      const EdgeId gone[] = {EdgeId(i)};
      const Subgraph rest = delete_edges(g, gone);
      const bool keeps = is_connected(rest.graph) && has_tree_packing(rest.graph, k);
      it = by_pair.emplace(key, keeps).first;
    }
    if (it->second) out.push_back(EdgeId(i));
  }
  return out;
}

}  // namespace strength
