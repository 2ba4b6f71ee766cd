#pragma once

// JSON rendering of invariants and certificates, and the re-verification
// of such a document against its input graph. Vertices and edges are
// 1-based in documents (edge i is the i-th `e` line); rationals are "p/q".

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "strength/certificates.hpp"
#include "strength/invariants.hpp"
#include "strength/maximality.hpp"
#include "strength/multigraph.hpp"
#include "strength/packing.hpp"
#include "strength/reinforce.hpp"
#include "strength/strength_equality.hpp"

namespace strength::report {

using json = nlohmann::json;

inline json vertices(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  json out = json::array();
  for (VertexId v : vs) out.push_back(v.index + 1);
  return out;
}

inline json edges(std::vector<EdgeId> es) {
  std::sort(es.begin(), es.end());
  json out = json::array();
  for (EdgeId e : es) out.push_back(e.index + 1);
  return out;
}

inline json pairs(const std::vector<VertexPair>& ps) {
  json out = json::array();
  for (const auto& [u, v] : ps) out.push_back({u + 1, v + 1});
  return out;
}

inline json cut(const EdgeCut& c) { return {{"side", vertices(c.side)}, {"edges", edges(c.cut_edges)}, {"size", c.size()}}; }

inline json partition(const PartitionCertificate& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(vertices(part));
  return {{"parts", parts}, {"crossing", edges(p.crossing)}, {"ratio", p.ratio.to_string()}};
}

inline json packing(const TreePacking& p) {
  json trees = json::array();
  for (const auto& t : p.trees) trees.push_back(edges(t));
  return {{"trees", trees}};
}

inline json join_tree(const JoinTree& t, std::size_t node = JoinTree::npos) {
  if (node == JoinTree::npos) node = t.root;
  const auto& x = t.nodes[node];
  if (x.is_leaf()) return {{"vertex", x.vertex.index + 1}};
  return {{"join_edges", edges(x.join_edges)}, {"left", join_tree(t, x.left)}, {"right", join_tree(t, x.right)}};
}

inline json kk_decomposition(const KkDecomposition& d, std::size_t node = KkDecomposition::npos) {
  if (node == KkDecomposition::npos) node = d.root;
  const auto& x = d.nodes[node];
  if (x.is_leaf()) return {{"piece", vertices(d.pieces[x.piece].vertex_origin)}};
  return {{"join_edges", edges(x.join_edges)},
          {"left", kk_decomposition(d, x.left)},
          {"right", kk_decomposition(d, x.right)}};
}

inline json invariants(const InvariantReport& r) {
  json out{{"n", r.n}, {"m", r.m}, {"omega", r.omega}};
  out["d"] = r.d ? json(r.d->to_string()) : json();
  out["kappa_prime"] = r.kappa_prime ? json(r.kappa_prime->value) : json();
  out["kappa_bar"] = r.kappa_bar ? json(r.kappa_bar->value) : json();
  out["tau"] = r.tau.is_unbounded() ? json("inf") : json(r.tau.value());
  out["eta"] = r.eta ? json(r.eta->first.to_string()) : json();
  out["gamma"] = r.gamma ? json(r.gamma->value.to_string()) : json();
  out["uniformly_dense"] = r.uniformly_dense ? json(*r.uniformly_dense) : json();
  return out;
}

/// Witnesses backing each reported value: the minimum cut, the subgraph
/// attaining kappa_bar, the partitions attaining eta and gamma, a packing
/// of tau trees and a violator for tau + 1.
inline json invariant_certificates(const Multigraph& g, const InvariantReport& r) {
  json out = json::object();
  if (r.kappa_prime) out["min_cut"] = cut(r.kappa_prime->witness);
  if (r.kappa_bar) out["kappa_bar_subgraph"] = vertices(r.kappa_bar->witness);
  if (r.eta) out["eta_partition"] = partition(r.eta->second);
  if (r.gamma) out["gamma_subgraph"] = vertices(r.gamma->witness);
  if (r.omega == 1 && !r.tau.is_unbounded()) {
    const auto t = static_cast<std::size_t>(r.tau.value());
    if (t >= 1) out["tree_packing"] = packing(std::get<TreePacking>(extract_tree_packing(g, t)));
    json deficiency = partition(std::get<PartitionCertificate>(extract_tree_packing(g, t + 1)));
    deficiency["k"] = t + 1;
    out["deficiency"] = deficiency;
  }
  return out;
}

inline json fk_verdict(const FkVerdict& v) {
  json out{{"verdict", v.flag}, {"certificates", json::object()}};
  if (v.certificate) {
    out["certificates"]["fk_certificate"] = {{"cut", cut(v.certificate->cut)},
                             {"eta", v.certificate->eta.to_string()},
                             {"d", v.certificate->density.to_string()},
                             {"gamma", v.certificate->gamma.to_string()}};
  }
  if (v.refutation) {
    static const char* names[] = {"wrong_cut_size", "density_not_k", "not_uniformly_dense"};
    json ref{{"reason", names[static_cast<int>(v.refutation->reason)]}, {"message", v.refutation->message}};
    if (v.refutation->cut) ref["cut"] = cut(*v.refutation->cut);
    if (v.refutation->dense_subgraph) ref["dense_subgraph"] = vertices(*v.refutation->dense_subgraph);
    if (v.refutation->partition) ref["partition"] = partition(*v.refutation->partition);
    out["certificates"]["refutation"] = ref;
    out["reason"] = v.refutation->message;
  }
  return out;
}

namespace detail {

struct Reader {
  const Multigraph& g;

  VertexId vertex(const json& j) const {
    const auto v = j.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > g.vertex_count()) throw std::out_of_range("vertex " + std::to_string(v));
    return VertexId(static_cast<std::size_t>(v - 1));
  }
  EdgeId edge(const json& j) const {
    const auto e = j.get<std::int64_t>();
    if (e < 1 || static_cast<std::size_t>(e) > g.edge_count()) throw std::out_of_range("edge " + std::to_string(e));
    return EdgeId(static_cast<std::size_t>(e - 1));
  }
  std::vector<VertexId> vertices(const json& j) const {
    std::vector<VertexId> out;
    for (const auto& x : j) out.push_back(vertex(x));
    return out;
  }
  std::vector<EdgeId> edges(const json& j) const {
    std::vector<EdgeId> out;
    for (const auto& x : j) out.push_back(edge(x));
    return out;
  }
  std::vector<VertexPair> pairs(const json& j) const {
    std::vector<VertexPair> out;
    for (const auto& p : j) out.emplace_back(vertex(p.at(0)).index, vertex(p.at(1)).index);
    return out;
  }
  EdgeCut cut(const json& j) const { return EdgeCut{vertices(j.at("side")), edges(j.at("edges"))}; }
  PartitionCertificate partition(const json& j) const {
    PartitionCertificate p;
    for (const auto& part : j.at("parts")) p.parts.push_back(vertices(part));
    p.crossing = edges(j.at("crossing"));
    p.ratio = Rational::parse(j.at("ratio").get<std::string>());
    return p;
  }
  TreePacking packing(const json& j) const {
    TreePacking p;
    for (const auto& t : j.at("trees")) p.trees.push_back(edges(t));
    return p;
  }
  std::size_t join_tree(const json& j, JoinTree& t) const {
    JoinTree::Node node;
    if (j.contains("vertex")) {
      node.vertex = vertex(j.at("vertex"));
    } else {
      node.join_edges = edges(j.at("join_edges"));
      node.left = join_tree(j.at("left"), t);
      node.right = join_tree(j.at("right"), t);
    }
    t.nodes.push_back(std::move(node));
    return t.nodes.size() - 1;
  }
  std::size_t kk(const json& j, KkDecomposition& d) const {
    KkDecomposition::Node node;
    if (j.contains("piece")) {
      node.piece = d.pieces.size();
      d.pieces.push_back(induced(g, vertices(j.at("piece"))));
    } else {
      node.join_edges = edges(j.at("join_edges"));
      node.left = kk(j.at("left"), d);
      node.right = kk(j.at("right"), d);
    }
    d.nodes.push_back(std::move(node));
    return d.nodes.size() - 1;
  }
};

inline std::optional<Rational> rational_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Rational::parse(j.at(key).get<std::string>());
}

inline Rational subset_density(const Multigraph& g, const std::vector<VertexId>& s) {
  return density(induced(g, s).graph);
}

inline bool check_certificates(const Multigraph& g, const json& doc, std::string* why) {
  const Reader read{g};
  const json none = json::object();
  const json& inv = doc.contains("invariants") ? doc.at("invariants") : none;
  const json& certs = doc.contains("certificates") ? doc.at("certificates") : none;
  const auto k = doc.contains("k") ? std::optional<std::size_t>(doc.at("k").get<std::size_t>()) : std::nullopt;

  if (certs.contains("min_cut")) {
    const EdgeCut c = read.cut(certs.at("min_cut"));
    if (!verify_edge_cut(g, c, why)) return false;
    if (inv.contains("kappa_prime") && inv.at("kappa_prime") != c.size()) return strength::detail::fail(why, "min cut size differs from kappa'");
  }
  if (certs.contains("kappa_bar_subgraph")) {
    const auto s = read.vertices(certs.at("kappa_bar_subgraph"));
    const Subgraph h = induced(g, s);
    const std::size_t value = h.graph.vertex_count() < 2 ? 0 : kappa_prime(h.graph).value;
    if (inv.contains("kappa_bar") && inv.at("kappa_bar") != value) return strength::detail::fail(why, "kappa_bar subgraph has a different kappa'");
  }
  if (certs.contains("eta_partition")) {
    const auto p = read.partition(certs.at("eta_partition"));
    if (!verify_partition(g, p, why)) return false;
    if (rational_field(inv, "eta") != p.ratio) return strength::detail::fail(why, "eta partition ratio differs from eta");
  }
  if (certs.contains("gamma_subgraph")) {
    const auto s = read.vertices(certs.at("gamma_subgraph"));
    if (s.size() < 2 || rational_field(inv, "gamma") != subset_density(g, s))
      return strength::detail::fail(why, "gamma subgraph density differs from gamma");
  }
  if (certs.contains("tree_packing")) {
    const auto p = read.packing(certs.at("tree_packing"));
    if (!verify_tree_packing(g, p, p.size(), why)) return false;
    if (inv.contains("tau") && inv.at("tau") != p.size()) return strength::detail::fail(why, "packing size differs from tau");
    if (k && p.size() != *k) return strength::detail::fail(why, "packing size differs from k");
  }
  if (certs.contains("deficiency")) {
    const auto& d = certs.at("deficiency");
    if (!verify_deficiency(g, read.partition(d), d.at("k").get<std::size_t>(), why)) return false;
  }
  if (certs.contains("join_tree")) {
    JoinTree t;
    t.root = read.join_tree(certs.at("join_tree"), t);
    if (!verify_join_tree(g, t, *k, why)) return false;
  }
  if (certs.contains("kk_decomposition")) {
    KkDecomposition d;
    d.root = read.kk(certs.at("kk_decomposition"), d);
    if (!verify_kk_decomposition(g, d, *k, why)) return false;
  }
  if (certs.contains("fk_certificate")) {
    const auto& c = certs.at("fk_certificate");
    const EdgeCut x = read.cut(c.at("cut"));
    if (!verify_edge_cut(g, x, why)) return false;
    if (x.size() != *k) return strength::detail::fail(why, "F_k cut is not of size k");
    const Rational target(static_cast<std::int64_t>(*k));
    if (rational_field(c, "d") != target || density(g) != target) return strength::detail::fail(why, "density is not k");
    if (rational_field(c, "eta") != target || eta(g).first != target) return strength::detail::fail(why, "eta is not k");
    if (rational_field(c, "gamma") != target || gamma(g).value != target) return strength::detail::fail(why, "gamma is not k");
  }
  if (certs.contains("refutation")) {
    const auto& r = certs.at("refutation");
    if (r.contains("cut")) {
      const EdgeCut x = read.cut(r.at("cut"));
      if (!verify_edge_cut(g, x, why)) return false;
      if (x.size() == *k) return strength::detail::fail(why, "refuting cut has size k");
      if (x.size() > *k && kappa_prime(g).value != x.size()) return strength::detail::fail(why, "refuting cut is not minimum");
    }
    const Rational d = density(g);
    if (r.contains("dense_subgraph") && !(subset_density(g, read.vertices(r.at("dense_subgraph"))) > d) &&
        !(r.contains("partition") && read.partition(r.at("partition")).ratio < d))
      return strength::detail::fail(why, "neither witness separates gamma or eta from d");
    if (r.contains("partition") && !verify_partition(g, read.partition(r.at("partition")), why)) return false;
    if (r.at("reason") == "density_not_k" && d == Rational(static_cast<std::int64_t>(*k)))
      return strength::detail::fail(why, "density is k after all");
  }
  if (certs.contains("witness_edges")) {
    const Subgraph h = keep_edges(g, read.edges(certs.at("witness_edges")));
    if (!verify_spanning_subgraph(g, h, why)) return false;
    if (!is_connected(h.graph) || !is_in_Fk(h.graph, *k).flag) return strength::detail::fail(why, "witness is not in F_{k,n}");
  }
  if (certs.contains("extension")) {
    const Multigraph h = g.with_edges(read.pairs(certs.at("extension").at("added_edges")));
    if (h.edge_count() != *k * (g.vertex_count() - 1)) return strength::detail::fail(why, "extension does not have k(n-1) edges");
    if (!is_in_Fk(h, *k).flag) return strength::detail::fail(why, "extension is not in F_{k,n}");
  }
  if (certs.contains("reinforcement")) {
    const auto& plan = certs.at("reinforcement");
    const Multigraph h = g.with_edges(read.pairs(plan.at("added_edges")));
    const Reader on_h{h};
    if (!verify_decomposition(h, on_h.packing(plan.at("packing")), *k, why)) return false;
  }
  if (certs.contains("removable")) {
    const auto listed = read.edges(certs.at("removable"));
    std::vector<bool> in(g.edge_count(), false);
    for (EdgeId e : listed) in[e.index] = true;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const EdgeId gone[] = {EdgeId(i)};
      const Subgraph rest = delete_edges(g, gone);
      const bool keeps = is_connected(rest.graph) && has_tree_packing(rest.graph, *k);
      if (keeps != in[i]) return strength::detail::fail(why, "edge " + std::to_string(i + 1) + " misclassified as removable or not");
    }
  }
  return true;
}

}  // namespace detail

/// Re-verifies every certificate found in `doc` against g. Unknown keys are
/// ignored; malformed certificates count as failures.
inline bool check_document(const Multigraph& g, const json& doc, std::string* why = nullptr) {
  try {
    return detail::check_certificates(g, doc, why);
  } catch (const std::exception& e) {
    return strength::detail::fail(why, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace strength::report
