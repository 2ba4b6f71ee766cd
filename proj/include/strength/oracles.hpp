#pragma once

// Exhaustive reference implementations. These deliberately share nothing
// with the main algorithms beyond the multigraph and certificate types.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strength/error.hpp"
#include "strength/multigraph.hpp"
#include "strength/partition.hpp"
#include "strength/rational.hpp"

namespace strength::oracle {

namespace detail {

inline void limit(const Multigraph& g, std::size_t max_n, const char* what) {
  if (g.vertex_count() > max_n)
    throw error(error_kind::too_large, std::string(what) + " limited to " + std::to_string(max_n) + " vertices");
}

inline std::uint32_t full_mask(std::size_t n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

inline std::vector<VertexId> members(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; mask >> v; ++v)
    if (mask >> v & 1u) out.push_back(VertexId(v));
  return out;
}

inline std::vector<std::uint32_t> neighbour_masks(const Multigraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u.index] |= 1u << e.v.index;
    adj[e.v.index] |= 1u << e.u.index;
  }
  return adj;
}

inline bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

inline std::size_t crossing_count(const Multigraph& g, std::uint32_t mask) {
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if ((mask >> e.u.index & 1u) != (mask >> e.v.index & 1u)) ++c;
  return c;
}

inline std::size_t inner_count(const Multigraph& g, std::uint32_t mask) {
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if ((mask >> e.u.index & 1u) && (mask >> e.v.index & 1u)) ++c;
  return c;
}

// Calls visit(labels, blocks) for every set partition, labels being a
// restricted-growth string.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      visit(labels, blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      labels[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return;
  labels[0] = 0;
  rec(1, 1);
}

inline std::size_t omega(const Multigraph& g) {
  const auto adj = neighbour_masks(g);
  std::uint32_t left = full_mask(g.vertex_count());
  std::size_t count = 0;
  while (left) {
    std::uint32_t comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

inline Multigraph induced_by_mask(const Multigraph& g, std::uint32_t mask) {
  return induced(g, members(mask)).graph;
}

}  // namespace detail

struct MinCut {
  std::size_t value = 0;
  EdgeCut cut;
};

/// Minimum over all 2^(n-1) - 1 vertex bipartitions.
inline MinCut brute_min_cut(const Multigraph& g) {
  detail::limit(g, 16, "brute_min_cut");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw error(error_kind::single_vertex, "no bipartition of K1");
  std::optional<std::size_t> best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    const std::size_t c = detail::crossing_count(g, mask);
    if (!best || c < *best) {
      best = c;
      best_mask = mask;
    }
  }
  return {*best, make_cut(g, detail::members(best_mask))};
}

/// eta by its definition over every set partition with more than omega parts.
inline std::pair<Rational, PartitionCertificate> brute_eta(const Multigraph& g) {
  detail::limit(g, 10, "brute_eta");
  const std::size_t n = g.vertex_count();
  const std::size_t omega = detail::omega(g);
  if (n == omega) throw error(error_kind::degenerate_denominator, "no partition with more than omega parts");
  std::optional<Rational> best;
  std::vector<std::size_t> best_labels;
  std::size_t best_blocks = 0;
  detail::for_each_partition(n, [&](const std::vector<std::size_t>& labels, std::size_t blocks) {
    if (blocks <= omega) return;
    std::size_t cross = 0;
    for (const auto& e : g.edges())
      if (labels[e.u.index] != labels[e.v.index]) ++cross;
    const Rational r(static_cast<std::int64_t>(cross), static_cast<std::int64_t>(blocks - omega));
    if (!best || r < *best) {
      best = r;
      best_labels = labels;
      best_blocks = blocks;
    }
  });
  std::vector<std::vector<VertexId>> parts(best_blocks);
  for (std::size_t v = 0; v < n; ++v) parts[best_labels[v]].push_back(VertexId(v));
  return {*best, make_partition(g, std::move(parts))};
}

/// gamma over connected induced subgraphs with at least two vertices.
inline std::pair<Rational, std::vector<VertexId>> brute_gamma(const Multigraph& g) {
  detail::limit(g, 16, "brute_gamma");
  if (g.edge_count() == 0) throw error(error_kind::no_edges, "brute_gamma of an edgeless graph");
  const auto adj = detail::neighbour_masks(g);
  std::optional<Rational> best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask <= detail::full_mask(g.vertex_count()); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || !detail::mask_connected(adj, mask)) continue;
    const Rational r(static_cast<std::int64_t>(detail::inner_count(g, mask)), size - 1);
    if (!best || r > *best) {
      best = r;
      best_mask = mask;
    }
  }
  return {*best, detail::members(best_mask)};
}

/// Largest k admitting k edge-disjoint spanning trees, by exhaustive search
/// over spanning trees. Only for very small graphs (m <= 20).
inline std::size_t brute_tau_by_trees(const Multigraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (m > 20) throw error(error_kind::too_large, "brute_tau_by_trees limited to 20 edges");
  if (n < 2) throw error(error_kind::single_vertex, "tau(K1) is unbounded");
  std::vector<std::uint32_t> trees;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    if (chosen.size() == n - 1) {
      std::vector<std::size_t> root(n);
      for (std::size_t v = 0; v < n; ++v) root[v] = v;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t v) { return root[v] == v ? v : root[v] = find(root[v]); };
      std::uint32_t mask = 0;
      for (std::size_t e : chosen) {
        const std::size_t a = find(g.edges()[e].u.index), b = find(g.edges()[e].v.index);
        if (a == b) return;
        root[a] = b;
        mask |= 1u << e;
      }
      trees.push_back(mask);
      return;
    }
    for (std::size_t e = next; e < m; ++e) {
      chosen.push_back(e);
      grow(e + 1);
      chosen.pop_back();
    }
  };
  grow(0);

  std::size_t best = 0;
  std::function<void(std::size_t, std::uint32_t, std::size_t)> pack = [&](std::size_t from, std::uint32_t used,
                                                                           std::size_t count) {
    best = std::max(best, count);
    if ((count + (m - std::popcount(used)) / (n - 1)) <= best) return;
    for (std::size_t t = from; t < trees.size(); ++t)
      if ((trees[t] & used) == 0) pack(t + 1, used | trees[t], count + 1);
  };
  pack(0, 0, 0);
  return best;
}

/// tau = floor(eta) with the literal Nash-Williams/Tutte condition; on tiny
/// graphs (n <= 6, m <= 12) confirmed by explicit tree search.
inline PackingNumber brute_tau(const Multigraph& g) {
  detail::limit(g, 10, "brute_tau");
  if (detail::omega(g) != 1) throw error(error_kind::disconnected, "brute_tau needs a connected graph");
  if (g.vertex_count() == 1) return PackingNumber::unbounded();
  const std::int64_t t = brute_eta(g).first.floor();
  if (g.vertex_count() <= 6 && g.edge_count() <= 12 && brute_tau_by_trees(g) != static_cast<std::size_t>(t))
    throw std::logic_error("brute_tau: tree search disagrees with floor(eta)");
  return PackingNumber(t);
}

struct SubgraphMax {
  std::size_t value = 0;
  std::vector<VertexId> witness;
};

namespace detail {

template <class F>
SubgraphMax max_over_connected_subsets(const Multigraph& g, F value_of) {
  const auto adj = neighbour_masks(g);
  SubgraphMax best;
  bool found = false;
  for (std::uint32_t mask = 1; mask <= full_mask(g.vertex_count()); ++mask) {
    if (std::popcount(mask) < 2 || !mask_connected(adj, mask)) continue;
    const std::size_t v = value_of(induced_by_mask(g, mask));
    if (!found || v > best.value) {
      best = {v, members(mask)};
      found = true;
    }
  }
  return best;
}

}  // namespace detail

/// max kappa' over connected induced subgraphs; 0 when there are no edges.
inline SubgraphMax brute_kappa_bar(const Multigraph& g) {
  detail::limit(g, 10, "brute_kappa_bar");
  if (g.vertex_count() < 2) throw error(error_kind::single_vertex, "kappa_bar of K1");
  SubgraphMax best = detail::max_over_connected_subsets(g, [](const Multigraph& h) { return brute_min_cut(h).value; });
  if (best.witness.empty()) best = {0, all_vertices(g)};
  return best;
}

/// max tau over connected induced subgraphs with two or more vertices.
inline SubgraphMax brute_tau_bar(const Multigraph& g) {
  detail::limit(g, 10, "brute_tau_bar");
  if (g.vertex_count() < 2) throw error(error_kind::single_vertex, "tau_bar of K1");
  SubgraphMax best = detail::max_over_connected_subsets(
      g, [](const Multigraph& h) { return static_cast<std::size_t>(brute_tau(h).value()); });
  if (best.witness.empty()) best = {0, all_vertices(g)};
  return best;
}

/// Membership in F_{k,n} by definition: kappa' = tau = k on k(n-1) edges,
/// the fewest any graph with tau = k can have.
inline bool brute_in_Fk(const Multigraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || detail::omega(g) != 1 || g.edge_count() != k * (n - 1)) return false;
  return brute_min_cut(g).value == k && brute_tau(g).value() == static_cast<std::int64_t>(k);
}

namespace detail {

inline std::vector<VertexPair> all_pairs(std::size_t n) {
  std::vector<VertexPair> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

// Enumerates multiplicity vectors x with 0 <= x[i] <= cap[i], sum = total.
inline bool for_each_bounded_composition(const std::vector<std::size_t>& cap, std::size_t total,
                                         const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> x(cap.size(), 0);
  std::vector<std::size_t> suffix(cap.size() + 1, 0);
  for (std::size_t i = cap.size(); i-- > 0;) suffix[i] = suffix[i + 1] + cap[i];
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == cap.size()) return left == 0 ? visit(x) : false;
    if (suffix[i] < left) return false;
    for (std::size_t c = 0; c <= std::min(cap[i], left); ++c) {
      x[i] = c;
      if (rec(i + 1, left - c)) return true;
    }
    x[i] = 0;
    return false;
  };
  return rec(0, total);
}

}  // namespace detail

/// Some spanning subgraph of g lies in F_{k,n}; returns its edge set.
inline std::optional<std::vector<EdgeId>> brute_restriction(const Multigraph& g, std::size_t k) {
  detail::limit(g, 6, "brute_restriction");
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() < k * (n - 1)) return std::nullopt;
  const auto pairs = detail::all_pairs(n);
  std::vector<std::vector<EdgeId>> by_pair(pairs.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [a, b] = std::minmax(g.edges()[i].u.index, g.edges()[i].v.index);
    const auto it = std::find(pairs.begin(), pairs.end(), VertexPair{a, b});
    by_pair[static_cast<std::size_t>(it - pairs.begin())].push_back(EdgeId(i));
  }
  std::vector<std::size_t> cap;
  for (const auto& ids : by_pair) cap.push_back(ids.size());
  std::optional<std::vector<EdgeId>> found;
  detail::for_each_bounded_composition(cap, k * (n - 1), [&](const std::vector<std::size_t>& x) {
    std::vector<EdgeId> keep;
    for (std::size_t p = 0; p < x.size(); ++p) keep.insert(keep.end(), by_pair[p].begin(), by_pair[p].begin() + static_cast<std::ptrdiff_t>(x[p]));
    if (!brute_in_Fk(keep_edges(g, keep).graph, k)) return false;
    std::sort(keep.begin(), keep.end());
    found = std::move(keep);
    return true;
  });
  return found;
}

/// Some supergraph of g on the same vertices lies in F_{k,n}; returns the
/// vertex pairs to add.
inline std::optional<std::vector<VertexPair>> brute_extension(const Multigraph& g, std::size_t k) {
  detail::limit(g, 5, "brute_extension");
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() > k * (n - 1)) return std::nullopt;
  const auto pairs = detail::all_pairs(n);
  const std::vector<std::size_t> cap(pairs.size(), k * (n - 1));
  std::optional<std::vector<VertexPair>> found;
  detail::for_each_bounded_composition(cap, k * (n - 1) - g.edge_count(), [&](const std::vector<std::size_t>& x) {
    std::vector<VertexPair> add;
    for (std::size_t p = 0; p < x.size(); ++p) add.insert(add.end(), x[p], pairs[p]);
    if (!brute_in_Fk(g.with_edges(add), k)) return false;
    found = std::move(add);
    return true;
  });
  return found;
}

/// k-maximality by definition: kappa_bar <= k, and every added edge pushes
/// kappa_bar above k.
inline bool brute_k_maximal(const Multigraph& g, std::size_t k) {
  detail::limit(g, 10, "brute_k_maximal");
  if (brute_kappa_bar(g).value > k) return false;
  for (const auto& p : detail::all_pairs(g.vertex_count())) {
    const VertexPair add[] = {p};
    if (brute_kappa_bar(g.with_edges(add)).value <= k) return false;
  }
  return true;
}

}  // namespace strength::oracle
