#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strength {

enum class error_kind {
  invalid_graph,
  degenerate_denominator,
  empty_subset,
  unknown_edge_id,
  index_out_of_range,
  single_vertex,
  no_edges,
  disconnected,
  insufficient_packing,
  invalid_size,
  not_k_maximal,
  not_in_fk,
  no_extension,
  gamma_too_large,
  too_large,
  unbounded_value,
  parse_error,
};

constexpr std::string_view to_string(error_kind kind) {
  switch (kind) {
    case error_kind::invalid_graph: return "InvalidGraph";
    case error_kind::degenerate_denominator: return "DegenerateDenominator";
    case error_kind::empty_subset: return "EmptySubset";
    case error_kind::unknown_edge_id: return "UnknownEdgeId";
    case error_kind::index_out_of_range: return "IndexOutOfRange";
    case error_kind::single_vertex: return "SingleVertex";
    case error_kind::no_edges: return "NoEdges";
    case error_kind::disconnected: return "Disconnected";
    case error_kind::insufficient_packing: return "InsufficientPacking";
    case error_kind::invalid_size: return "InvalidSize";
    case error_kind::not_k_maximal: return "NotKMaximal";
    case error_kind::not_in_fk: return "NotInFk";
    case error_kind::no_extension: return "NoExtension";
    case error_kind::gamma_too_large: return "GammaTooLarge";
    case error_kind::too_large: return "TooLarge";
    case error_kind::unbounded_value: return "UnboundedValue";
    case error_kind::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Contract violation raised by library operations. The kind names the
/// violated precondition; what() carries a human-readable detail.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace strength
