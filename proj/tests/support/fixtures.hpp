#pragma once

// Named graphs and corpora shared by the unit and acceptance suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "strength/canonical.hpp"
#include "strength/multigraph.hpp"

namespace strength::fixtures {

inline Multigraph k1() { return Multigraph(1); }

/// kK2: two vertices joined by k parallel edges.
inline Multigraph parallel(std::size_t k) {
  std::vector<VertexPair> e(k, {0, 1});
  return Multigraph(2, e);
}

inline Multigraph cycle(std::size_t n) {
  std::vector<VertexPair> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Multigraph(n, e);
}

inline Multigraph path(std::size_t n) {
  std::vector<VertexPair> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Multigraph(n, e);
}

inline Multigraph star(std::size_t n) {
  std::vector<VertexPair> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(0, v);
  return Multigraph(n, e);
}

inline Multigraph complete(std::size_t n) {
  std::vector<VertexPair> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Multigraph(n, e);
}

/// Two K4 on {0..3} and {4..7} joined by the bridge 3-4 (edge id 12).
inline Multigraph two_k4_bridge() {
  std::vector<VertexPair> e;
  for (std::size_t base : {0u, 4u})
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = u + 1; v < 4; ++v) e.emplace_back(base + u, base + v);
  e.emplace_back(3, 4);
  return Multigraph(8, e);
}

inline Multigraph two_disjoint_k2() { return Multigraph(4, {{0, 1}, {2, 3}}); }

inline Multigraph two_disjoint_triangles() { return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

/// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Multigraph two_triangles_edge() {
  return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

/// 2K2 on {0,1} and 2K2 on {2,3} joined by `cut` edges alternating 0-2, 1-3.
inline Multigraph doubled_pairs_joined(std::size_t cut) {
  std::vector<VertexPair> e{{0, 1}, {0, 1}, {2, 3}, {2, 3}};
  for (std::size_t i = 0; i < cut; ++i) e.push_back(i % 2 == 0 ? VertexPair{0, 2} : VertexPair{1, 3});
  return Multigraph(4, e);
}

/// (K1 *2 K1) *2 K1 with join edges a-c, b-c: vertices a=0, b=1, c=2.
inline Multigraph double_pair_plus_vertex() { return Multigraph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}}); }

/// K4 *2 K1: K4 on {0..3}, extra vertex 4 joined to 0 and 1.
inline Multigraph k4_join_vertex() {
  std::vector<VertexPair> e = complete(4).edge_pairs();
  e.emplace_back(0, 4);
  e.emplace_back(1, 4);
  return Multigraph(5, e);
}

/// Pseudorandom connected multigraphs: n in [2, max_n], each vertex pair
/// present with probability `presence` and multiplicity in [1, max_mult];
/// disconnected draws are rejected.
inline std::vector<Multigraph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_n = 8,
                                             std::size_t max_mult = 4) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  while (out.size() < count) {
    const std::size_t n = 2 + rng() % (max_n - 1);
    const double presence = 0.25 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    std::vector<VertexPair> e;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (static_cast<double>(rng() % 1000) / 1000.0 >= presence) continue;
        const std::size_t mult = 1 + rng() % max_mult;
        for (std::size_t i = 0; i < mult; ++i) e.emplace_back(u, v);
      }
    Multigraph g(n, e);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Every connected multigraph with 2 <= n <= max_n and m <= max_m edges,
/// one representative per isomorphism class.
inline std::vector<Multigraph> exhaustive_corpus(std::size_t max_n, std::size_t max_m) {
  std::vector<Multigraph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<VertexPair> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::size_t> mult(pairs.size(), 0);
    std::vector<VertexPair> edges;
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i == pairs.size()) {
        if (edges.size() + 1 < n) return;
        Multigraph g(n, edges);
        if (!is_connected(g)) return;
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        for (std::size_t r = 0; r < c; ++r) edges.push_back(pairs[i]);
        self(self, i + 1, left - c);
        edges.resize(edges.size() - c);
      }
    };
    rec(rec, 0, max_m);
  }
  return out;
}

}  // namespace strength::fixtures
