#pragma once

// Text format, one record per line, vertices 1-based:
//   p multigraph <n> <m>
//   e <u> <v>          (m times; repeat a line for parallel edges)
// Lines starting with '#' and blank lines are ignored.

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "strength/error.hpp"
#include "strength/multigraph.hpp"

namespace strength {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw error(error_kind::parse_error, "line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_count(std::istringstream& in, std::size_t line, const char* what) {
  std::string token;
  if (!(in >> token)) parse_fail(line, std::string("missing ") + what);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.front() == '-' || token.front() == '+')
    parse_fail(line, std::string(what) + " '" + token + "' is not a non-negative integer");
  return static_cast<std::size_t>(value);
}

}  // namespace detail

inline Multigraph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0, header_line = 0, declared_n = 0, declared_m = 0;
  bool have_header = false;
  std::vector<VertexPair> pairs;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream fields(text.substr(first));
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) detail::parse_fail(line_no, "second header line");
      std::string kind;
      if (!(fields >> kind) || kind != "multigraph") detail::parse_fail(line_no, "expected 'p multigraph <n> <m>'");
      declared_n = detail::parse_count(fields, line_no, "vertex count");
      declared_m = detail::parse_count(fields, line_no, "edge count");
      if (declared_n == 0) detail::parse_fail(line_no, "graph needs at least one vertex");
      have_header = true;
      header_line = line_no;
    } else if (tag == "e") {
      if (!have_header) detail::parse_fail(line_no, "edge before header");
      const std::size_t u = detail::parse_count(fields, line_no, "endpoint");
      const std::size_t v = detail::parse_count(fields, line_no, "endpoint");
      if (u < 1 || u > declared_n || v < 1 || v > declared_n)
        detail::parse_fail(line_no, "endpoint outside 1.." + std::to_string(declared_n));
      if (u == v) detail::parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
      pairs.emplace_back(u - 1, v - 1);
    } else {
      detail::parse_fail(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) detail::parse_fail(line_no, "trailing text '" + extra + "'");
  }
  if (!have_header) detail::parse_fail(line_no + 1, "missing 'p multigraph' header");
  if (pairs.size() != declared_m)
    detail::parse_fail(header_line, "header declares " + std::to_string(declared_m) + " edges, found " +
                                        std::to_string(pairs.size()));
  return Multigraph(declared_n, pairs);
}

inline Multigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

/// Canonical text: optional comment lines, header, edges in id order.
inline std::string emit_graph(const Multigraph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p multigraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u.index + 1 << ' ' << e.v.index + 1 << '\n';
  return out.str();
}

}  // namespace strength
