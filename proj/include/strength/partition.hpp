#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "strength/error.hpp"
#include "strength/multigraph.hpp"
#include "strength/rational.hpp"

namespace strength {

/// A vertex partition with its crossing edges and the ratio
/// |crossing| / (|parts| - omega). Build through make_partition so the
/// derived fields always agree with the parts.
struct PartitionCertificate {
  std::vector<std::vector<VertexId>> parts;
  std::vector<EdgeId> crossing;
  Rational ratio;
};

/// Canonicalises and validates the parts (sorted members, parts ordered by
/// smallest member) and computes the crossing set and ratio.
inline PartitionCertificate make_partition(const Multigraph& g, std::vector<std::vector<VertexId>> parts) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> part_of(n, SIZE_MAX);
  for (auto& part : parts) {
    if (part.empty()) throw error(error_kind::empty_subset, "partition with an empty part");
    std::sort(part.begin(), part.end());
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (VertexId v : parts[i]) {
      if (v.index >= n) throw error(error_kind::index_out_of_range, "vertex " + std::to_string(v.index));
      if (part_of[v.index] != SIZE_MAX)
        throw error(error_kind::invalid_graph, "vertex " + std::to_string(v.index) + " in two parts");
      part_of[v.index] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (part_of[v] == SIZE_MAX) throw error(error_kind::invalid_graph, "vertex " + std::to_string(v) + " uncovered");

  PartitionCertificate cert{std::move(parts), {}, Rational(0)};
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (part_of[e.u.index] != part_of[e.v.index]) cert.crossing.push_back(EdgeId(i));
  }
  const std::size_t omega = components(g).count;
  if (cert.parts.size() > omega)
    cert.ratio = Rational(static_cast<std::int64_t>(cert.crossing.size()),
                          static_cast<std::int64_t>(cert.parts.size() - omega));
  return cert;
}

inline std::vector<std::vector<VertexId>> singleton_parts(std::size_t n) {
  std::vector<std::vector<VertexId>> parts;
  for (std::size_t v = 0; v < n; ++v) parts.push_back({VertexId(v)});
  return parts;
}

/// k pairwise edge-disjoint spanning trees, each as a list of EdgeIds.
struct TreePacking {
  std::vector<std::vector<EdgeId>> trees;

  std::size_t size() const { return trees.size(); }
};

/// Either the requested packing or a partition P with
/// |crossing(P)| < k (|P| - 1), which rules one out.
using PackingOutcome = std::variant<TreePacking, PartitionCertificate>;

/// tau as an extended integer: tau(K1) is unbounded.
class PackingNumber {
 public:
  constexpr explicit PackingNumber(std::int64_t value) : value_(value) {}
  static constexpr PackingNumber unbounded() {
    PackingNumber p(0);
    p.unbounded_ = true;
    return p;
  }

  constexpr bool is_unbounded() const { return unbounded_; }

  std::int64_t value() const {
    if (unbounded_) throw error(error_kind::unbounded_value, "tau(K1) has no finite value");
    return value_;
  }

  std::string to_string() const { return unbounded_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const PackingNumber&, const PackingNumber&) = default;

 private:
  std::int64_t value_;
  bool unbounded_ = false;
};

}  // namespace strength
