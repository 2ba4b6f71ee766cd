#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strength/error.hpp"
#include "strength/flow.hpp"
#include "strength/multigraph.hpp"
#include "strength/packing.hpp"
#include "strength/rational.hpp"

namespace strength {

struct CutValue {
  std::size_t value = 0;
  EdgeCut witness;
};

struct SubgraphValue {
  std::size_t value = 0;
  std::vector<VertexId> witness;  // vertex set inducing the optimum
};

struct DensityValue {
  Rational value;
  std::vector<VertexId> witness;
};

namespace detail {

inline void require_two_vertices(const Multigraph& g, const char* what) {
  if (g.vertex_count() < 2) throw error(error_kind::single_vertex, std::string(what) + " is undefined on K1");
}

// Stoer-Wagner on the multiplicity matrix. Returns the best phase cut as the
// vertex group merged into the last-added vertex.
inline std::pair<std::int64_t, std::vector<VertexId>> stoer_wagner(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  auto w = g.multiplicity_matrix();
  std::vector<std::vector<VertexId>> group(n);
  for (std::size_t v = 0; v < n; ++v) group[v] = {VertexId(v)};
  std::vector<bool> merged(n, false);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<VertexId> best_side;
  for (std::size_t phase = n; phase > 1; --phase) {
    std::vector<std::int64_t> attach(n, 0);
    std::vector<bool> added(n, false);
    std::size_t prev = SIZE_MAX;
    for (std::size_t step = 0; step < phase; ++step) {
      std::size_t sel = SIZE_MAX;
      for (std::size_t v = 0; v < n; ++v)
        if (!merged[v] && !added[v] && (sel == SIZE_MAX || attach[v] > attach[sel])) sel = v;
      if (step + 1 == phase) {
        if (attach[sel] < best) {
          best = attach[sel];
          best_side = group[sel];
        }
        group[prev].insert(group[prev].end(), group[sel].begin(), group[sel].end());
        for (std::size_t v = 0; v < n; ++v) {
          w[prev][v] += w[sel][v];
          w[v][prev] = w[prev][v];
        }
        merged[sel] = true;
      } else {
        added[sel] = true;
        for (std::size_t v = 0; v < n; ++v) attach[v] += w[sel][v];
        prev = sel;
      }
    }
  }
  return {best, best_side};
}

}  // namespace detail

/// Edge connectivity with a minimum cut. A disconnected graph yields 0 and
/// the empty cut around the component of vertex 0.
inline CutValue kappa_prime(const Multigraph& g) {
  detail::require_two_vertices(g, "edge connectivity");
  const Components comps = components(g);
  if (comps.count > 1) return {0, make_cut(g, comps.groups().front())};
  auto [value, side] = detail::stoer_wagner(g);
  EdgeCut cut = make_cut(g, std::move(side));
  if (cut.size() != static_cast<std::size_t>(value)) throw std::logic_error("kappa_prime: cut size mismatch");
  return {cut.size(), std::move(cut)};
}

namespace detail {

inline void kappa_bar_rec(const Multigraph& g, const std::vector<VertexId>& origin, SubgraphValue& best,
                          bool& found) {
  if (g.vertex_count() < 2) return;
  const CutValue cut = kappa_prime(g);
  if (!found || cut.value > best.value) {
    best.value = cut.value;
    best.witness = origin;
    found = true;
  }
  // Any subgraph more connected than this cut avoids the cut edges, so it
  // sits inside one side.
  for (const auto& side : {cut.witness.side, complement(g.vertex_count(), cut.witness.side)}) {
    const Subgraph part = induced(g, side);
    kappa_bar_rec(part.graph, map_ids(part.vertex_origin, origin), best, found);
  }
}

}  // namespace detail

/// Maximum edge connectivity over subgraphs, by recursive min-cut splitting.
inline SubgraphValue kappa_bar(const Multigraph& g) {
  detail::require_two_vertices(g, "maximum subgraph edge connectivity");
  SubgraphValue best;
  bool found = false;
  detail::kappa_bar_rec(g, all_vertices(g), best, found);
  return best;
}

/// Fractional arboricity gamma(G) = max |E(H)| / (|V(H)| - 1) over
/// connected induced H with two or more vertices. Dinkelbach iteration: for
/// the current ratio c = p/q, one maximum closure per forced vertex decides
/// whether some S has q |E(S)| - p (|S| - 1) > 0.
inline DensityValue gamma(const Multigraph& g) {
  if (g.edge_count() == 0) throw error(error_kind::no_edges, "fractional arboricity of an edgeless graph");
  const std::size_t n = g.vertex_count();
  const auto w = g.multiplicity_matrix();
  std::vector<detail::WeightedPair> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (w[u][v] > 0) pairs.push_back({u, v, w[u][v]});

  Rational ratio(0);
  std::vector<VertexId> witness;
  while (true) {
    std::int64_t best_gain = 0;
    std::vector<bool> best_set;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t forced[] = {v};
      detail::Closure c = detail::max_closure(n, pairs, ratio.den(), ratio.num(), forced);
      if (c.value > best_gain) {
        best_gain = c.value;
        best_set = std::move(c.members);
      }
    }
    if (best_gain <= 0) break;
    std::vector<VertexId> s;
    for (std::size_t v = 0; v < n; ++v)
      if (best_set[v]) s.push_back(VertexId(v));
    ratio = Rational(static_cast<std::int64_t>(inner_edge_count(g, s)), static_cast<std::int64_t>(s.size() - 1));
    witness = std::move(s);
  }

  // Keep the densest component of the witness; by the mediant inequality it
  // attains the same ratio.
  const Subgraph h = induced(g, witness);
  for (const auto& group : components(h.graph).groups()) {
    if (group.size() < 2) continue;
    auto members = map_ids(group, h.vertex_origin);
    const Rational d(static_cast<std::int64_t>(inner_edge_count(g, members)),
                     static_cast<std::int64_t>(members.size() - 1));
    if (d == ratio) return {ratio, std::move(members)};
  }
  throw std::logic_error("gamma: no component attains the maximum");
}

struct UniformDensity {
  bool flag = false;
  Rational eta;
  Rational density;
  Rational gamma;
};

/// d(G) = gamma(G), cross-checked against the equivalent eta(G) = d(G).
inline UniformDensity is_uniformly_dense(const Multigraph& g) {
  detail::require_connected(g, "uniform density");
  if (g.edge_count() == 0) throw error(error_kind::no_edges, "uniform density of K1");
  UniformDensity out{false, eta(g).first, density(g), gamma(g).value};
  out.flag = out.density == out.gamma;
  if (out.flag != (out.eta == out.density) || out.flag != (out.eta == out.gamma))
    throw std::logic_error("uniform density: eta = d and d = gamma disagree");
  return out;
}

/// The full invariant chain for one graph. Fields that are undefined for
/// the input (e.g. density of an edgeless graph) are left empty.
struct InvariantReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t omega = 0;
  std::optional<Rational> d;
  std::optional<CutValue> kappa_prime;
  std::optional<SubgraphValue> kappa_bar;
  PackingNumber tau{0};
  std::optional<std::pair<Rational, PartitionCertificate>> eta;
  std::optional<DensityValue> gamma;
  std::optional<bool> uniformly_dense;
};

inline InvariantReport analyze(const Multigraph& g) {
  InvariantReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.omega = components(g).count;
  const bool connected = r.omega == 1;
  if (r.n > r.omega) {
    r.d = density(g);
    r.eta = eta(g);
    r.gamma = gamma(g);
  }
  if (r.n >= 2) {
    r.kappa_prime = kappa_prime(g);
    r.kappa_bar = kappa_bar(g);
  }
  r.tau = connected ? tau(g) : PackingNumber(0);
  if (connected && r.m > 0) {
    r.uniformly_dense = *r.d == r.gamma->value;
    if (*r.uniformly_dense != (r.eta->first == *r.d))
      throw std::logic_error("uniform density: eta = d and d = gamma disagree");
  }
  return r;
}

}  // namespace strength
