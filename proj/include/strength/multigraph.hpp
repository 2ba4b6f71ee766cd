#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strength/error.hpp"
#include "strength/rational.hpp"

namespace strength {

template <class Tag>
struct Id {
  std::size_t index = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(const Id&, const Id&) = default;
};

using VertexId = Id<struct vertex_tag>;
using EdgeId = Id<struct edge_tag>;

struct Edge {
  VertexId u;
  VertexId v;

  constexpr VertexId other(VertexId w) const { return w == u ? v : u; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

/// Finite loopless multigraph on vertices 0..n-1. Edge identities are the
/// positions in the edge list, so parallel edges stay distinguishable.
/// Values are immutable once built.
class Multigraph {
 public:
  explicit Multigraph(std::size_t n = 1) : n_(n), incidence_(n) {
    if (n == 0) throw error(error_kind::invalid_graph, "a multigraph needs at least one vertex");
  }

  Multigraph(std::size_t n, std::span<const VertexPair> pairs) : Multigraph(n) {
    edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) append(a, b);
  }

  Multigraph(std::size_t n, std::initializer_list<VertexPair> pairs)
      : Multigraph(n, std::span<const VertexPair>(pairs.begin(), pairs.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(EdgeId id) const {
    if (id.index >= edges_.size())
      throw error(error_kind::unknown_edge_id, "edge " + std::to_string(id.index));
    return edges_[id.index];
  }

  std::span<const EdgeId> incident(VertexId v) const {
    if (v.index >= n_) throw error(error_kind::index_out_of_range, "vertex " + std::to_string(v.index));
    return incidence_[v.index];
  }

  std::size_t degree(VertexId v) const { return incident(v).size(); }

  /// Copy of this graph with extra edges appended; existing EdgeIds keep
  /// their meaning.
  Multigraph with_edges(std::span<const VertexPair> pairs) const {
    Multigraph out = *this;
    for (const auto& [a, b] : pairs) out.append(a, b);
    return out;
  }

  std::vector<VertexPair> edge_pairs() const {
    std::vector<VertexPair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u.index, e.v.index);
    return out;
  }

  /// Symmetric n x n matrix of edge multiplicities.
  std::vector<std::vector<std::int64_t>> multiplicity_matrix() const {
    std::vector<std::vector<std::int64_t>> w(n_, std::vector<std::int64_t>(n_, 0));
    for (const auto& e : edges_) {
      ++w[e.u.index][e.v.index];
      ++w[e.v.index][e.u.index];
    }
    return w;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void append(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_)
      throw error(error_kind::index_out_of_range,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") on " + std::to_string(n_) + " vertices");
    if (a == b) throw error(error_kind::invalid_graph, "self-loop at vertex " + std::to_string(a));
    const EdgeId id(edges_.size());
    edges_.push_back({VertexId(a), VertexId(b)});
    incidence_[a].push_back(id);
    incidence_[b].push_back(id);
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A derived graph together with where its vertices and edges came from.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

/// Vertex bipartition (S, V \ S) and the edges crossing it.
struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<EdgeId> cut_edges;

  std::size_t size() const { return cut_edges.size(); }
};

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> labels;  // component index per vertex

  std::vector<std::vector<VertexId>> groups() const {
    std::vector<std::vector<VertexId>> out(count);
    for (std::size_t v = 0; v < labels.size(); ++v) out[labels[v]].push_back(VertexId(v));
    return out;
  }
};

inline Components components(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  Components out;
  out.labels.assign(n, SIZE_MAX);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.labels[s] != SIZE_MAX) continue;
    out.labels[s] = out.count;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(VertexId(v))) {
        const std::size_t w = g.edge(e).other(VertexId(v)).index;
        if (out.labels[w] == SIZE_MAX) {
          out.labels[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

inline bool is_connected(const Multigraph& g) { return components(g).count == 1; }

/// |E| / (|V| - omega).
inline Rational density(const Multigraph& g) {
  const std::size_t omega = components(g).count;
  const std::size_t denom = g.vertex_count() - omega;
  if (denom == 0) throw error(error_kind::degenerate_denominator, "every component is a single vertex");
  return Rational(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(denom));
}

inline std::vector<bool> membership(std::size_t n, std::span<const VertexId> s) {
  std::vector<bool> in(n, false);
  for (VertexId v : s) {
    if (v.index >= n) throw error(error_kind::index_out_of_range, "vertex " + std::to_string(v.index));
    in[v.index] = true;
  }
  return in;
}

/// G[s]. Vertices of the result are the members of s in increasing order.
inline Subgraph induced(const Multigraph& g, std::span<const VertexId> s) {
  if (s.empty()) throw error(error_kind::empty_subset, "induced subgraph of an empty vertex set");
  const std::vector<bool> in = membership(g.vertex_count(), s);
  std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
  std::vector<VertexId> origin;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    local[v] = origin.size();
    origin.push_back(VertexId(v));
  }
  std::vector<VertexPair> pairs;
  std::vector<EdgeId> edge_origin;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (in[e.u.index] && in[e.v.index]) {
      pairs.emplace_back(local[e.u.index], local[e.v.index]);
      edge_origin.push_back(EdgeId(i));
    }
  }
  return {Multigraph(origin.size(), pairs), std::move(origin), std::move(edge_origin)};
}

/// G - X on the same vertex set; surviving edges keep their relative order.
inline Subgraph delete_edges(const Multigraph& g, std::span<const EdgeId> x) {
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeId e : x) {
    if (e.index >= g.edge_count()) throw error(error_kind::unknown_edge_id, "edge " + std::to_string(e.index));
    removed[e.index] = true;
  }
  std::vector<VertexPair> pairs;
  std::vector<EdgeId> edge_origin;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (removed[i]) continue;
    const Edge& e = g.edges()[i];
    pairs.emplace_back(e.u.index, e.v.index);
    edge_origin.push_back(EdgeId(i));
  }
  std::vector<VertexId> vertex_origin;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_origin.push_back(VertexId(v));
  return {Multigraph(g.vertex_count(), pairs), std::move(vertex_origin), std::move(edge_origin)};
}

/// Spanning subgraph keeping exactly the listed edges.
inline Subgraph keep_edges(const Multigraph& g, std::span<const EdgeId> keep) {
  std::vector<bool> kept(g.edge_count(), false);
  for (EdgeId e : keep) {
    if (e.index >= g.edge_count()) throw error(error_kind::unknown_edge_id, "edge " + std::to_string(e.index));
    kept[e.index] = true;
  }
  std::vector<EdgeId> removed;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!kept[i]) removed.push_back(EdgeId(i));
  return delete_edges(g, removed);
}

struct JoinResult {
  Multigraph graph;
  std::vector<EdgeId> join_edges;
};

/// Disjoint union of g1 and g2 (g2's vertices shifted by |V(g1)|) plus one
/// new edge per pair. Edges of g1 come first, then g2, then the join set.
inline JoinResult k_edge_join(const Multigraph& g1, const Multigraph& g2,
                              std::span<const std::pair<VertexId, VertexId>> pairs) {
  const std::size_t n1 = g1.vertex_count();
  std::vector<VertexPair> all = g1.edge_pairs();
  for (const auto& e : g2.edges()) all.emplace_back(e.u.index + n1, e.v.index + n1);
  std::vector<EdgeId> join;
  for (const auto& [a, b] : pairs) {
    if (a.index >= n1 || b.index >= g2.vertex_count())
      throw error(error_kind::index_out_of_range,
                  "join pair (" + std::to_string(a.index) + "," + std::to_string(b.index) + ")");
    join.push_back(EdgeId(all.size()));
    all.emplace_back(a.index, b.index + n1);
  }
  return {Multigraph(n1 + g2.vertex_count(), all), std::move(join)};
}

/// Edges with exactly one endpoint in s.
inline std::vector<EdgeId> crossing_edges(const Multigraph& g, std::span<const VertexId> s) {
  const std::vector<bool> in = membership(g.vertex_count(), s);
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (in[e.u.index] != in[e.v.index]) out.push_back(EdgeId(i));
  }
  return out;
}

inline EdgeCut make_cut(const Multigraph& g, std::vector<VertexId> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  EdgeCut cut{std::move(side), {}};
  cut.cut_edges = crossing_edges(g, cut.side);
  return cut;
}

inline std::vector<VertexId> complement(std::size_t n, std::span<const VertexId> s) {
  const std::vector<bool> in = membership(n, s);
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!in[v]) out.push_back(VertexId(v));
  return out;
}

inline std::vector<VertexId> all_vertices(const Multigraph& g) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(VertexId(v));
  return out;
}

/// Number of edges with both endpoints in s.
inline std::size_t inner_edge_count(const Multigraph& g, std::span<const VertexId> s) {
  const std::vector<bool> in = membership(g.vertex_count(), s);
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (in[e.u.index] && in[e.v.index]) ++count;
  return count;
}

/// Translates local ids through an origin table (from Subgraph).
template <class T>
std::vector<T> map_ids(const std::vector<T>& ids, const std::vector<T>& origin) {
  std::vector<T> out;
  out.reserve(ids.size());
  for (T id : ids) out.push_back(origin[id.index]);
  return out;
}

}  // namespace strength
