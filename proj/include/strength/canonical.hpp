#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "strength/error.hpp"
#include "strength/multigraph.hpp"

namespace strength {

/// Isomorphism-invariant code of a multigraph: n followed by the
/// multiplicity matrix read column by column (0,1),(0,2),(1,2),(0,3),...
/// under the lexicographically smallest vertex order compatible with colour
/// refinement. Exact; intended for small graphs (n <= 10).
inline std::vector<std::int64_t> canonical_form(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 10) throw error(error_kind::too_large, "canonical_form limited to 10 vertices");
  const auto w = g.multiplicity_matrix();

  std::vector<std::size_t> colour(n, 0);
  for (std::size_t v = 0; v < n; ++v) colour[v] = g.degree(VertexId(v));
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::vector<std::int64_t>, std::size_t> palette;
    std::vector<std::vector<std::int64_t>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::int64_t> nbrs;
      for (std::size_t u = 0; u < n; ++u)
        if (w[v][u] > 0) nbrs.push_back(static_cast<std::int64_t>(colour[u]) * 1024 + w[v][u]);
      std::sort(nbrs.begin(), nbrs.end());
      signature[v] = {static_cast<std::int64_t>(colour[v])};
      signature[v].insert(signature[v].end(), nbrs.begin(), nbrs.end());
      palette.emplace(signature[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    std::vector<std::size_t> refined(n);
    for (std::size_t v = 0; v < n; ++v) refined[v] = palette[signature[v]];
    const bool stable = palette.size() == std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = std::move(refined);
    if (stable) break;
  }

  // Positions are filled in colour order; within a colour any vertex may go.
  std::vector<std::size_t> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());

  std::vector<std::int64_t> best, code;
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  bool have_best = false;
  std::function<void(std::size_t)> place = [&](std::size_t p) {
    if (p == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[p]) continue;
      const std::size_t mark = code.size();
      for (std::size_t i = 0; i < p; ++i) code.push_back(w[order[i]][v]);
      bool worse = false;
      if (have_best) {
        const auto prefix_end = best.begin() + static_cast<std::ptrdiff_t>(code.size());
        worse = std::lexicographical_compare(best.begin(), prefix_end, code.begin(), code.end());
      }
      if (!worse) {
        used[v] = true;
        order.push_back(v);
        place(p + 1);
        order.pop_back();
        used[v] = false;
      }
      code.resize(mark);
    }
  };
  place(0);

  std::vector<std::int64_t> out{static_cast<std::int64_t>(n)};
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace strength
