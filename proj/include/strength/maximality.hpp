#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strength/certificates.hpp"
#include "strength/error.hpp"
#include "strength/invariants.hpp"
#include "strength/multigraph.hpp"

namespace strength {

/// F(n, k) = k(n - 1), the edge count of every k-maximal graph on n vertices.
inline std::size_t max_edge_count(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw error(error_kind::invalid_size, "max_edge_count needs n >= 1 and k >= 1");
  return k * (n - 1);
}

struct KMaximalVerdict {
  bool flag = false;
  InvariantReport evidence;
  std::string reason;  // first failing condition when flag is false
};

/// k-maximal iff tau = kappa_bar = k. The edge-count characterisation
/// (|E| = k(n-1) with kappa_bar <= k) is evaluated alongside and must agree.
inline KMaximalVerdict is_k_maximal(const Multigraph& g, std::size_t k) {
  if (g.vertex_count() < 2 || k < 1) throw error(error_kind::invalid_size, "is_k_maximal needs n >= 2 and k >= 1");
  KMaximalVerdict out;
  out.evidence = analyze(g);
  const auto& r = out.evidence;
  const auto kk = static_cast<std::int64_t>(k);
  const std::size_t kappa_bar_value = r.kappa_bar->value;
  if (r.omega != 1) {
    out.reason = "disconnected";
  } else if (r.tau.value() != kk) {
    out.reason = "tau=" + r.tau.to_string() + " != k";
  } else if (kappa_bar_value != k) {
    out.reason = "kappa_bar=" + std::to_string(kappa_bar_value) + " != k";
  } else {
    out.flag = true;
  }
  const bool extremal = r.m == max_edge_count(r.n, k) && kappa_bar_value <= k;
  if (extremal != out.flag) throw std::logic_error("is_k_maximal: edge-count characterisation disagrees");
  return out;
}

namespace detail {

// Deterministic across standard libraries: mt19937_64 output is specified,
// the reduction here is ours.
inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

inline Multigraph grow_k_maximal(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (n == 1) return Multigraph(1);
  std::size_t left_n = n - 1;
  if (n >= 4 && draw(rng, 2) == 1) left_n = 2 + draw(rng, n - 3);
  const Multigraph left = grow_k_maximal(left_n, k, rng);
  const Multigraph right = grow_k_maximal(n - left_n, k, rng);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    pairs.emplace_back(VertexId(draw(rng, left.vertex_count())), VertexId(draw(rng, right.vertex_count())));
  return k_edge_join(left, right, pairs).graph;
}

}  // namespace detail

/// A member of G_k on n vertices: repeated k-edge-joins of smaller members
/// and K1, with join endpoints drawn uniformly (repetition allowed).
/// Vertex labels are shuffled at the end. Deterministic in (n, k, seed).
inline Multigraph generate_k_maximal(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 2) throw error(error_kind::invalid_size, "generate_k_maximal needs n >= 2");
  if (k < 1) throw error(error_kind::invalid_size, "generate_k_maximal needs k >= 1");
  std::mt19937_64 rng(seed);
  const Multigraph raw = detail::grow_k_maximal(n, k, rng);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[detail::draw(rng, i)]);
  std::vector<VertexPair> pairs;
  for (const auto& e : raw.edges()) pairs.emplace_back(label[e.u.index], label[e.v.index]);
  return Multigraph(n, pairs);
}

/// Binary join tree whose leaves are single vertices of the decomposed graph
/// and whose internal nodes carry the k edges joining their two halves.
struct JoinTree {
  static constexpr std::size_t npos = SIZE_MAX;

  struct Node {
    VertexId vertex;  // leaves only
    std::size_t left = npos;
    std::size_t right = npos;
    std::vector<EdgeId> join_edges;

    bool is_leaf() const { return left == npos; }
  };

  std::vector<Node> nodes;
  std::size_t root = npos;

  std::size_t leaf_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& x) { return x.is_leaf(); }));
  }
  std::size_t join_count() const { return nodes.size() - leaf_count(); }

  /// Leaf vertices below node `i`, left to right.
  std::vector<VertexId> leaves(std::size_t i) const {
    if (nodes[i].is_leaf()) return {nodes[i].vertex};
    auto out = leaves(nodes[i].left);
    auto right = leaves(nodes[i].right);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
};

namespace detail {

inline std::size_t split_rec(const Multigraph& g, const std::vector<VertexId>& origin, const std::vector<EdgeId>& edge_origin,
                             std::size_t k, JoinTree& tree) {
  JoinTree::Node node;
  if (g.vertex_count() == 1) {
    node.vertex = origin.front();
    tree.nodes.push_back(std::move(node));
    return tree.nodes.size() - 1;
  }
  const CutValue cut = kappa_prime(g);
  if (cut.value != k) throw std::logic_error("join_decompose: piece without a k-edge cut");
  node.join_edges = map_ids(cut.witness.cut_edges, edge_origin);
  std::sort(node.join_edges.begin(), node.join_edges.end());
  std::size_t halves[2];
  int i = 0;
  for (const auto& side : {cut.witness.side, complement(g.vertex_count(), cut.witness.side)}) {
    const Subgraph part = induced(g, side);
    halves[i++] = split_rec(part.graph, map_ids(part.vertex_origin, origin), map_ids(part.edge_origin, edge_origin), k, tree);
  }
  node.left = halves[0];
  node.right = halves[1];
  tree.nodes.push_back(std::move(node));
  return tree.nodes.size() - 1;
}

}  // namespace detail

/// Splits a k-maximal graph along k-edge cuts down to single vertices.
inline JoinTree join_decompose(const Multigraph& g, std::size_t k) {
  const KMaximalVerdict verdict = is_k_maximal(g, k);
  if (!verdict.flag) throw error(error_kind::not_k_maximal, verdict.reason);
  JoinTree tree;
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) edges.push_back(EdgeId(i));
  tree.root = detail::split_rec(g, all_vertices(g), edges, k, tree);
  return tree;
}

struct Assembled {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;  // assembled vertex -> vertex of g
};

/// Folds the tree back together with k_edge_join, starting from K1 leaves.
/// Join edge endpoints are read from g.
inline Assembled assemble(const JoinTree& tree, const Multigraph& g, std::size_t node = JoinTree::npos) {
  if (node == JoinTree::npos) node = tree.root;
  const auto& x = tree.nodes.at(node);
  if (x.is_leaf()) return {Multigraph(1), {x.vertex}};
  Assembled left = assemble(tree, g, x.left);
  Assembled right = assemble(tree, g, x.right);
  auto local = [](const std::vector<VertexId>& origin, VertexId v) -> std::size_t {
    const auto it = std::find(origin.begin(), origin.end(), v);
    return it == origin.end() ? JoinTree::npos : static_cast<std::size_t>(it - origin.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId e : x.join_edges) {
    const Edge& edge = g.edge(e);
    std::size_t a = local(left.vertex_origin, edge.u), b = local(right.vertex_origin, edge.v);
    if (a == JoinTree::npos || b == JoinTree::npos) {
      a = local(left.vertex_origin, edge.v);
      b = local(right.vertex_origin, edge.u);
    }
    if (a == JoinTree::npos || b == JoinTree::npos)
      throw error(error_kind::invalid_graph, "join edge " + std::to_string(e.index) + " does not cross its node");
    pairs.emplace_back(VertexId(a), VertexId(b));
  }
  Assembled out{k_edge_join(left.graph, right.graph, pairs).graph, std::move(left.vertex_origin)};
  out.vertex_origin.insert(out.vertex_origin.end(), right.vertex_origin.begin(), right.vertex_origin.end());
  return out;
}

/// Leaves cover V once; every node's join set is exactly the k edges of g
/// between its two halves. Together these make reassembly reproduce g.
inline bool verify_join_tree(const Multigraph& g, const JoinTree& tree, std::size_t k, std::string* why = nullptr) {
  if (tree.root >= tree.nodes.size()) return detail::fail(why, "join tree without a root");
  std::vector<VertexId> all = tree.leaves(tree.root);
  std::sort(all.begin(), all.end());
  if (all != all_vertices(g)) return detail::fail(why, "leaves do not cover every vertex exactly once");
  std::size_t joined = 0;
  for (const auto& x : tree.nodes) {
    if (x.is_leaf()) continue;
    if (x.join_edges.size() != k)
      return detail::fail(why, "join of size " + std::to_string(x.join_edges.size()) + " instead of " + std::to_string(k));
    const auto left = membership(g.vertex_count(), tree.leaves(x.left));
    const auto right = membership(g.vertex_count(), tree.leaves(x.right));
    std::vector<EdgeId> between;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      if ((left[e.u.index] && right[e.v.index]) || (left[e.v.index] && right[e.u.index])) between.push_back(EdgeId(i));
    }
    if (detail::sorted(x.join_edges) != between) return detail::fail(why, "join set differs from the edges between halves");
    joined += k;
  }
  if (joined != g.edge_count()) return detail::fail(why, "edges outside every join set");
  return true;
}

}  // namespace strength
