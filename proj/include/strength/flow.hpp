#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace strength::detail {

/// Dinic maximum flow with 64-bit capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (layer(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from source in the residual graph after run(); this is
  /// the minimal source side of a minimum cut.
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t a : adj_[v]) {
        if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t capacity;
  };

  bool layer(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t a : adj_[v]) {
        if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t push(std::size_t v, std::size_t sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
      Arc& arc = arcs_[adj_[v][i]];
      if (arc.capacity <= 0 || level_[arc.to] != level_[v] + 1) continue;
      const std::int64_t got = push(arc.to, sink, std::min(limit, arc.capacity));
      if (got > 0) {
        arc.capacity -= got;
        arcs_[adj_[v][i] ^ 1].capacity += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

struct WeightedPair {
  std::size_t u;
  std::size_t v;
  std::int64_t weight;
};

struct Closure {
  std::int64_t value = 0;
  std::vector<bool> members;
};

/// Maximises  edge_scale * w(E(S)) - vertex_cost * |S \ forced|  over vertex
/// sets S that contain every forced vertex. E(S) counts pairs with both ends
/// in S. Solved as a maximum-weight closure (pairs imply their endpoints);
/// the returned set is the smallest maximiser.
inline Closure max_closure(std::size_t n, std::span<const WeightedPair> pairs, std::int64_t edge_scale,
                           std::int64_t vertex_cost, std::span<const std::size_t> forced) {
  const std::size_t source = n + pairs.size();
  const std::size_t sink = source + 1;
  std::vector<bool> is_forced(n, false);
  for (std::size_t f : forced) is_forced[f] = true;

  std::int64_t gains = 0;
  for (const auto& p : pairs) gains += edge_scale * p.weight;
  const std::int64_t infinite = gains + vertex_cost * static_cast<std::int64_t>(n) + 1;

  MaxFlow flow(n + pairs.size() + 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::size_t node = n + i;
    flow.add_arc(source, node, edge_scale * pairs[i].weight);
    flow.add_arc(node, pairs[i].u, infinite);
    flow.add_arc(node, pairs[i].v, infinite);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (is_forced[v])
      flow.add_arc(source, v, infinite);
    else if (vertex_cost > 0)
      flow.add_arc(v, sink, vertex_cost);
  }
  const std::int64_t cut = flow.run(source, sink);
  const std::vector<bool> side = flow.source_side(source);

  Closure out;
  out.value = gains - cut;
  out.members.assign(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

}  // namespace strength::detail
