#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strength/graph_file.hpp"
#include "strength/maximality.hpp"
#include "strength/oracles.hpp"
#include "strength/packing.hpp"
#include "strength/reinforce.hpp"
#include "strength/report.hpp"
#include "strength/strength_equality.hpp"

namespace strength::cli {

using json = nlohmann::json;

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int failure = 2;
inline constexpr int check_failure = 3;

struct Outcome {
  json doc;
  int code = ok;
  std::optional<std::string> graph_text;  // printed instead of the human summary
};

struct Options {
  std::string file = "-";
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string oracle;
  bool as_json = false;
  bool check = false;
};

inline std::size_t oracle_max_n() {
  if (const char* env = std::getenv("STRENGTH_ORACLE_MAX_N")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw error(error_kind::invalid_size, std::string("STRENGTH_ORACLE_MAX_N='") + env + "' is not a number");
    }
  }
  return 10;
}

inline Multigraph load(const std::string& file, std::istream& in) {
  if (file == "-") return parse_graph(in);
  std::ifstream f(file);
  if (!f) throw error(error_kind::parse_error, "cannot open " + file);
  return parse_graph(f);
}

inline json header(const char* command, const Multigraph& g) {
  return {{"command", command}, {"input", {{"n", g.vertex_count()}, {"m", g.edge_count()}}}};
}

inline std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void print_human(const json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "certificates") continue;
    if (value.is_object()) {
      for (const auto& [sub, x] : value.items()) out << key << '.' << sub << ": " << scalar(x) << '\n';
    } else {
      out << key << ": " << scalar(value) << '\n';
    }
  }
  if (doc.contains("certificates"))
    for (const auto& [key, value] : doc.at("certificates").items()) out << "certificate " << key << ": " << value.dump() << '\n';
}

inline json added_pairs(const Multigraph& g, const Multigraph& h) {
  std::vector<VertexPair> extra;
  for (std::size_t i = g.edge_count(); i < h.edge_count(); ++i)
    extra.emplace_back(h.edges()[i].u.index, h.edges()[i].v.index);
  return report::pairs(extra);
}

inline Outcome cmd_analyze(const Multigraph& g) {
  const InvariantReport r = analyze(g);
  json doc = header("analyze", g);
  doc["invariants"] = report::invariants(r);
  doc["certificates"] = report::invariant_certificates(g, r);
  return {doc, ok, {}};
}

inline Outcome cmd_verify_kmaximal(const Multigraph& g, std::size_t k) {
  const KMaximalVerdict v = is_k_maximal(g, k);
  json doc = header("verify-kmaximal", g);
  doc["k"] = k;
  doc["verdict"] = v.flag;
  if (!v.flag) doc["reason"] = v.reason;
  doc["invariants"] = report::invariants(v.evidence);
  doc["certificates"] = report::invariant_certificates(g, v.evidence);
  if (v.flag) doc["certificates"]["join_tree"] = report::join_tree(join_decompose(g, k));
  return {doc, v.flag ? ok : negative, {}};
}

inline Outcome cmd_generate(std::size_t n, std::size_t k, std::uint64_t seed) {
  const Multigraph g = generate_k_maximal(n, k, seed);
  json doc = header("generate", g);
  doc["k"] = k;
  doc["seed"] = seed;
  const std::string text = emit_graph(g, {"k-maximal graph, n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                          " seed=" + std::to_string(seed)});
  doc["graph_file"] = text;
  doc["certificates"]["join_tree"] = report::join_tree(join_decompose(g, k));
  return {doc, ok, text};
}

inline Outcome cmd_decompose(const Multigraph& g, std::size_t k) {
  json doc = header("decompose", g);
  doc["k"] = k;
  try {
    const JoinTree t = join_decompose(g, k);
    doc["verdict"] = true;
    doc["leaves"] = t.leaf_count();
    doc["joins"] = t.join_count();
    doc["certificates"]["join_tree"] = report::join_tree(t);
    return {doc, ok, {}};
  } catch (const error& e) {
    if (e.kind() != error_kind::not_k_maximal) throw;
    doc["verdict"] = false;
    doc["reason"] = e.what();
    return {doc, negative, {}};
  }
}

inline Outcome cmd_decompose_fk(const Multigraph& g, std::size_t k) {
  json doc = header("decompose-fk", g);
  doc["k"] = k;
  try {
    const KkDecomposition d = decompose_Fk(g, k);
    doc["verdict"] = true;
    doc["pieces"] = d.pieces.size();
    doc["certificates"]["kk_decomposition"] = report::kk_decomposition(d);
    return {doc, ok, {}};
  } catch (const error& e) {
    if (e.kind() != error_kind::not_in_fk) throw;
    doc["verdict"] = false;
    doc["reason"] = e.what();
    return {doc, negative, {}};
  }
}

inline Outcome cmd_membership(const Multigraph& g, std::size_t k) {
  const FkVerdict v = is_in_Fk(g, k);
  json doc = header("membership", g);
  doc["k"] = k;
  doc.update(report::fk_verdict(v));
  return {doc, v.flag ? ok : negative, {}};
}

inline Outcome cmd_kappa_tau(const Multigraph& g, std::size_t k) {
  const EqualityVerdict v = kappa_eq_tau(g, k);
  json doc = header("kappa-tau", g);
  doc["k"] = k;
  doc["verdict"] = v.flag;
  doc["certificates"] = json::object();
  if (!v.flag) doc["reason"] = v.reason;
  if (v.witness) doc["certificates"]["witness_edges"] = report::edges(v.witness->edge_origin);
  if (v.cut) doc["certificates"]["min_cut"] = report::cut(*v.cut);
  return {doc, v.flag ? ok : negative, {}};
}

inline Outcome cmd_extend(const Multigraph& g, std::size_t k) {
  json doc = header("extend", g);
  doc["k"] = k;
  try {
    const Multigraph h = build_extension(g, k);
    doc["verdict"] = true;
    doc["certificates"]["extension"] = {{"added_edges", added_pairs(g, h)}};
    const std::string text = emit_graph(h, {"extension in F_{k,n} for k=" + std::to_string(k),
                                            "edges 1.." + std::to_string(g.edge_count()) + " are the input"});
    doc["graph_file"] = text;
    return {doc, ok, text};
  } catch (const error& e) {
    if (e.kind() != error_kind::no_extension) throw;
    doc["verdict"] = false;
    doc["reason"] = e.what();
    return {doc, negative, {}};
  }
}

inline Outcome cmd_restrict(const Multigraph& g, std::size_t k) {
  const RestrictionVerdict v = restriction_exists(g, k);
  json doc = header("restrict", g);
  doc["k"] = k;
  doc["verdict"] = v.flag;
  if (!v.flag) {
    doc["reason"] = v.reason;
    return {doc, negative, {}};
  }
  doc["certificates"]["witness_edges"] = report::edges(v.witness->edge_origin);
  const std::string text = emit_graph(v.witness->graph, {"restriction in F_{k,n} for k=" + std::to_string(k)});
  doc["graph_file"] = text;
  return {doc, ok, text};
}

inline Outcome cmd_reinforce(const Multigraph& g, std::size_t k) {
  json doc = header("reinforce", g);
  doc["k"] = k;
  try {
    const ReinforcementPlan plan = reinforce_to_k_trees(g, k);
    const Multigraph h = apply_plan(g, plan);
    doc["verdict"] = true;
    doc["added"] = plan.added_edges.size();
    doc["certificates"]["reinforcement"] = {{"added_edges", report::pairs(plan.added_edges)},
                                            {"packing", report::packing(plan.resulting_packing)}};
    const std::string text = emit_graph(h, {"decomposes into " + std::to_string(k) + " spanning trees",
                                            std::to_string(plan.added_edges.size()) + " edges added"});
    doc["graph_file"] = text;
    return {doc, ok, text};
  } catch (const error& e) {
    if (e.kind() != error_kind::gamma_too_large) throw;
    doc["verdict"] = false;
    doc["reason"] = e.what();
    return {doc, negative, {}};
  }
}

inline Outcome cmd_removable(const Multigraph& g, std::size_t k) {
  json doc = header("removable", g);
  doc["k"] = k;
  const auto removable = removable_edges(g, k);
  doc["count"] = removable.size();
  doc["certificates"]["removable"] = report::edges(removable);
  return {doc, ok, {}};
}

inline Outcome cmd_pack(const Multigraph& g, std::size_t k) {
  json doc = header("pack", g);
  doc["k"] = k;
  const PackingOutcome p = extract_tree_packing(g, k);
  const bool found = std::holds_alternative<TreePacking>(p);
  doc["verdict"] = found;
  if (found) {
    doc["certificates"]["tree_packing"] = report::packing(std::get<TreePacking>(p));
  } else {
    json d = report::partition(std::get<PartitionCertificate>(p));
    d["k"] = k;
    doc["certificates"]["deficiency"] = d;
  }
  return {doc, found ? ok : negative, {}};
}

inline Outcome cmd_oracle(const std::string& which, const Multigraph& g) {
  const std::size_t limit = oracle_max_n();
  if (g.vertex_count() > limit)
    throw error(error_kind::too_large, "oracle limited to n <= " + std::to_string(limit) + " (STRENGTH_ORACLE_MAX_N)");
  json doc = header("oracle", g);
  doc["oracle"] = which;
  json& inv = doc["invariants"] = json::object();
  json& certs = doc["certificates"] = json::object();
  if (which == "min-cut") {
    const auto c = oracle::brute_min_cut(g);
    inv["kappa_prime"] = c.value;
    certs["min_cut"] = report::cut(c.cut);
  } else if (which == "eta") {
    const auto [value, p] = oracle::brute_eta(g);
    inv["eta"] = value.to_string();
    certs["eta_partition"] = report::partition(p);
  } else if (which == "gamma") {
    const auto [value, s] = oracle::brute_gamma(g);
    inv["gamma"] = value.to_string();
    certs["gamma_subgraph"] = report::vertices(s);
  } else if (which == "tau") {
    inv["tau"] = oracle::brute_tau(g).to_string();
  } else if (which == "kappa-bar") {
    const auto best = oracle::brute_kappa_bar(g);
    inv["kappa_bar"] = best.value;
    certs["kappa_bar_subgraph"] = report::vertices(best.witness);
  } else {
    const auto best = oracle::brute_tau_bar(g);
    inv["tau_bar"] = best.value;
    doc["tau_bar_subgraph"] = report::vertices(best.witness);
  }
  return {doc, ok, {}};
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge connectivity, spanning tree packing and strength of multigraphs", "strength"};
  app.require_subcommand(1);
  Options opt;
  std::function<Outcome(const Multigraph&)> action;
  std::function<Outcome()> standalone;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.as_json, "print one JSON document");
    sub->add_flag("--check", opt.check, "re-verify every certificate before exiting");
  };
  auto on_file = [&](const char* name, const char* help, std::function<Outcome(const Multigraph&)> f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "graph file, - for standard input")->required();
    common(sub);
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto with_k = [&](const char* name, const char* help, Outcome (*f)(const Multigraph&, std::size_t)) {
    CLI::App* sub = on_file(name, help, [&opt, f](const Multigraph& g) { return f(g, opt.k); });
    sub->add_option("-k", opt.k, "target value k")->required()->check(CLI::PositiveNumber);
  };

  on_file("analyze", "all invariants with witnesses", cmd_analyze);
  with_k("verify-kmaximal", "test k-maximality", cmd_verify_kmaximal);
  with_k("decompose", "join tree of a k-maximal graph", cmd_decompose);
  with_k("decompose-fk", "split an F_k member into K(k) pieces", cmd_decompose_fk);
  with_k("membership", "test membership in F_k", cmd_membership);
  with_k("kappa-tau", "test kappa' = tau = k, with a spanning F_{k,n} witness", cmd_kappa_tau);
  with_k("extend", "supergraph in F_{k,n}", cmd_extend);
  with_k("restrict", "spanning subgraph in F_{k,n}", cmd_restrict);
  with_k("reinforce", "add edges until k spanning trees decompose the graph", cmd_reinforce);
  with_k("removable", "edges whose removal keeps k spanning trees", cmd_removable);
  with_k("pack", "k edge-disjoint spanning trees or a violating partition", cmd_pack);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference values");
  oracle_cmd->add_option("kind", opt.oracle, "min-cut, eta, gamma, tau, kappa-bar or tau-bar")
      ->required()
      ->check(CLI::IsMember({"min-cut", "eta", "gamma", "tau", "kappa-bar", "tau-bar"}));
  oracle_cmd->add_option("file", opt.file, "graph file, - for standard input")->required();
  common(oracle_cmd);
  oracle_cmd->callback([&] { action = [&opt](const Multigraph& g) { return cmd_oracle(opt.oracle, g); }; });

  CLI::App* gen = app.add_subcommand("generate", "random k-maximal graph as a graph file");
  gen->add_option("--n", opt.n, "vertex count")->required();
  gen->add_option("-k,--k", opt.k, "k")->required();
  gen->add_option("--seed", opt.seed, "random seed");
  common(gen);
  gen->callback([&] { standalone = [&] { return cmd_generate(opt.n, opt.k, opt.seed); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : failure;
  }

  std::optional<Multigraph> g;
  Outcome result;
  try {
    if (standalone) {
      result = standalone();
      g = parse_graph(*result.graph_text);
    } else {
      g = load(opt.file, in);
      result = action(*g);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return failure;
  }

  if (opt.check) {
    std::string why;
    if (!report::check_document(*g, result.doc, &why)) {
      err << "check failed: " << why << '\n';
      return check_failure;
    }
  }
  if (opt.as_json) {
    out << result.doc.dump(2) << '\n';
  } else if (result.graph_text) {
    out << *result.graph_text;
  } else {
    print_human(result.doc, out);
  }
  return result.code;
}

}  // namespace strength::cli
