// Copyright 2026 The svpnd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svpnd/io.hpp"

#include <fstream>
#include <sstream>

#include "svpnd/error.hpp"

namespace svpnd {
namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  parse_error("node labels must be strings or integers");
}

Rational number_of(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  parse_error("exact numbers must be integers or strings such as \"3/2\" or \"0.25\"");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

NodeId node_of(const Network& net, const Json& j) {
  std::string label = label_of(j);
  auto id = net.find_node(label);
  if (!id) throw Error(ErrorCode::kUnknownNode, "unknown node '" + label + "'");
  return *id;
}

Json edge_json(const Network& net, EdgeId e) {
  return Json::array({net.label(net.edge(e).u), net.label(net.edge(e).v)});
}

EdgeId edge_of(const Network& net, const Json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("edges are written as [u, v]");
  auto e = net.find_edge(node_of(net, j[0]), node_of(net, j[1]));
  if (!e) parse_error("no edge {" + label_of(j[0]) + "," + label_of(j[1]) + "}");
  return *e;
}

Json path_json(const Network& net, const Path& path) {
  Json out = Json::array();
  for (NodeId v : path.nodes) out.push_back(net.label(v));
  return out;
}

Path path_of(const Network& net, const Json& j, bool trail) {
  if (!j.is_array()) parse_error("paths are arrays of node labels");
  Path path{{}, trail};
  for (const auto& v : j) path.nodes.push_back(node_of(net, v));
  return path;
}

std::string edge_key(const Network& net, EdgeId e) {
  return net.label(net.edge(e).u) + "|" + net.label(net.edge(e).v);
}

Json optional_number(const std::optional<Rational>& value) {
  return value ? Json(value->to_string()) : Json(nullptr);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    parse_error("malformed JSON in '" + path + "': " + e.what());
  }
}

RawInstance raw_instance_from_json(const Json& j) {
  RawInstance raw;
  for (const auto& v : field(j, "nodes")) raw.nodes.push_back(label_of(v));
  for (const auto& e : field(j, "edges")) {
    raw.edges.push_back({label_of(field(e, "u")), label_of(field(e, "v")), number_of(field(e, "cost"))});
  }
  for (const auto& t : field(j, "terminals")) {
    std::int64_t bound = 1;
    if (t.contains("bound")) {
      if (!t.at("bound").is_number_integer()) parse_error("terminal bounds must be integers");
      bound = t.at("bound").get<std::int64_t>();
    }
    raw.terminals.push_back({label_of(field(t, "node")), bound});
  }
  return raw;
}

Instance instance_from_json(const Json& j) { return validate_instance(raw_instance_from_json(j)); }

Json instance_to_json(const Instance& instance) {
  RawInstance raw = to_raw(instance);
  Json out;
  out["nodes"] = raw.nodes;
  out["edges"] = Json::array();
  for (const auto& e : raw.edges) out["edges"].push_back({{"u", e.u}, {"v", e.v}, {"cost", e.cost.to_string()}});
  out["terminals"] = Json::array();
  for (const auto& t : raw.terminals) out["terminals"].push_back({{"node", t.node}, {"bound", t.bound}});
  return out;
}

Json demand_set_to_json(const Instance& instance, const DemandSet& demands) {
  const Network& net = instance.network();
  Json out = {{"demands", Json::array()}};
  for (const auto& [pair, value] : demands.entries()) {
    out["demands"].push_back(
        {{"pair", {net.label(pair.first), net.label(pair.second)}}, {"value", value.to_string()}});
  }
  return out;
}

DemandSet demand_set_from_json(const Instance& instance, const Json& j) {
  const Network& net = instance.network();
  DemandSet out;
  for (const auto& d : field(j, "demands")) {
    const Json& pair = field(d, "pair");
    if (!pair.is_array() || pair.size() != 2) parse_error("demand pairs are written as [i, j]");
    Rational value = number_of(field(d, "value"));
    if (value.sign() < 0) parse_error("demands must be nonnegative");
    NodeId a = node_of(net, pair[0]);
    NodeId b = node_of(net, pair[1]);
    if (a == b) parse_error("demand pair repeats a node");
    out.set(a, b, value);
  }
  return out;
}

Json vpn_solution_to_json(const Instance& instance, const VpnSolution& solution) {
  const Network& net = instance.network();
  Json out = {{"paths", Json::array()}, {"capacities", Json::array()}};
  for (const auto& [pair, path] : solution.paths) {
    out["paths"].push_back(
        {{"pair", {net.label(pair.first), net.label(pair.second)}}, {"path", path_json(net, path)}});
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(solution.capacities.size()); ++e) {
    if (solution.capacities[e].sign() != 0) {
      out["capacities"].push_back({{"edge", edge_json(net, e)}, {"capacity", solution.capacities[e].to_string()}});
    }
  }
  out["cost"] = solution.cost(net).to_string();
  return out;
}

VpnSolution vpn_solution_from_json(const Instance& instance, const Json& j) {
  if (j.is_object() && j.contains("tree_edges")) {
    return to_vpn_solution(instance, tree_solution_from_json(instance, j));
  }
  const Network& net = instance.network();
  VpnSolution out;
  out.capacities.assign(net.num_edges(), Rational{});
  for (const auto& p : field(j, "paths")) {
    const Json& pair = field(p, "pair");
    if (!pair.is_array() || pair.size() != 2) parse_error("path pairs are written as [i, j]");
    NodePair key = make_node_pair(node_of(net, pair[0]), node_of(net, pair[1]));
    out.paths[key] = path_of(net, field(p, "path"), false);
  }
  if (j.contains("capacities")) {
    for (const auto& c : j.at("capacities")) {
      Rational value = number_of(field(c, "capacity"));
      if (value.sign() < 0) parse_error("capacities must be nonnegative");
      out.capacities[edge_of(net, field(c, "edge"))] = value;
    }
  }
  return out;
}

Json tree_solution_to_json(const Instance& instance, const TreeSolution& tree) {
  const Network& net = instance.network();
  Json out = {{"tree_edges", Json::array()}, {"capacities", Json::object()}};
  for (EdgeId e : tree.tree_edges) {
    out["tree_edges"].push_back(edge_json(net, e));
    out["capacities"][edge_key(net, e)] = tree.capacities[e];
  }
  out["cost"] = tree_cost(instance, tree).to_string();
  out["certified"] = std::string(to_string(tree.certified));
  return out;
}

TreeSolution tree_solution_from_json(const Instance& instance, const Json& j) {
  std::vector<EdgeId> edges;
  for (const auto& e : field(j, "tree_edges")) edges.push_back(edge_of(instance.network(), e));
  TreeSolution tree = tree_capacities(instance, edges);
  if (j.contains("certified") && j.at("certified") == "exhaustive") {
    tree.certified = Certification::kExhaustive;
  }
  return tree;
}

Json pr_system_to_json(const PrInstance& pr, const PrPathSystem& system) {
  const Network& net = pr.instance.network();
  Json out = {{"source", net.label(system.source)}, {"paths", Json::object()}};
  bool trail = false;
  for (const auto& [t, path] : system.paths) {
    out["paths"][net.label(t)] = path_json(net, path);
    trail = trail || path.trail;
  }
  out["cost"] = pr_cost(pr, system).to_string();
  if (trail) out["trails"] = true;
  return out;
}

PrPathSystem pr_system_from_json(const Instance& instance, const Json& j) {
  const Network& net = instance.network();
  bool trail = j.is_object() && j.value("trails", false);
  PrPathSystem out{node_of(net, field(j, "source")), {}};
  const Json& paths = field(j, "paths");
  if (!paths.is_object()) parse_error("'paths' maps terminal labels to node lists");
  for (const auto& [label, path] : paths.items()) {
    auto t = net.find_node(label);
    if (!t) throw Error(ErrorCode::kUnknownNode, "unknown node '" + label + "'");
    out.paths[*t] = path_of(net, path, trail);
  }
  return out;
}

Json feasibility_report_to_json(const Instance& instance, const FeasibilityReport& report) {
  const Network& net = instance.network();
  Json out = {{"feasible", report.feasible}, {"violations", Json::array()}};
  for (const auto& v : report.violations) {
    out["violations"].push_back({{"edge", edge_json(net, v.edge)},
                                 {"load", v.load.to_string()},
                                 {"capacity", v.capacity.to_string()},
                                 {"slack", (v.capacity - v.load).to_string()},
                                 {"witness", demand_set_to_json(instance, v.witness)}});
  }
  return out;
}

Json certificate_to_json(const Instance& instance, const LowerBoundCertificate& cert) {
  const Network& net = instance.network();
  Json out = {{"solution_cost", cert.solution_cost.to_string()},
              {"bound", cert.bound.to_string()},
              {"argmin_terminal", net.label(cert.argmin_terminal)},
              {"per_terminal_pr_costs", Json::object()},
              {"witnesses", Json::array()}};
  for (const auto& [t, cost] : cert.per_terminal_pr_costs) out["per_terminal_pr_costs"][net.label(t)] = cost.to_string();
  for (const auto& [e, witness] : cert.witness_demands) {
    if (witness.empty()) continue;
    out["witnesses"].push_back({{"edge", edge_json(net, e)}, {"demands", demand_set_to_json(instance, witness)["demands"]}});
  }
  return out;
}

Json chain_report_to_json(const Instance& instance, const ChainReport& report) {
  const Network& net = instance.network();
  Json out = {{"svpnd_optimum", report.svpnd_optimum.to_string()},
              {"pr_minimum", report.pr_minimum.to_string()},
              {"tree_optimum", report.tree_optimum.to_string()},
              {"heuristic_tree", report.heuristic_tree.to_string()},
              {"chain_holds", report.chain_holds},
              {"tree_search_agrees", report.tree_search_agrees},
              {"conjecture1", report.conjecture1},
              {"conjecture2", report.conjecture2},
              {"pr_optimum_by_source", Json::object()}};
  for (const auto& [t, cost] : report.pr_optimum_by_source) out["pr_optimum_by_source"][net.label(t)] = cost.to_string();
  return out;
}

Json reduction_to_json(const ReductionMap& map) {
  const Network& reduced = map.reduced.network();
  const Network& original = map.original.network();
  Json out = {{"variant", std::string(to_string(map.variant))},
              {"original", instance_to_json(map.original)},
              {"instance", instance_to_json(map.reduced)},
              {"chains", Json::array()},
              {"edge_provenance", Json::array()}};
  for (const auto& chain : map.chains) {
    Json subs = Json::array();
    for (NodeId s : chain.sub_terminals) subs.push_back(reduced.label(s));
    out["chains"].push_back({{"terminal", original.label(chain.terminal)}, {"sub_terminals", subs}});
  }
  for (EdgeId e = 0; e < reduced.num_edges(); ++e) {
    const auto& origin = map.edge_provenance[e];
    out["edge_provenance"].push_back(
        {{"edge", edge_json(reduced, e)}, {"original", origin ? edge_json(original, *origin) : Json(nullptr)}});
  }
  return out;
}

ReductionMap reduction_from_json(const Json& j) {
  ReductionMap map;
  std::string variant = field(j, "variant").get<std::string>();
  if (variant == "star") {
    map.variant = ReductionVariant::kStar;
  } else if (variant == "subdivision") {
    map.variant = ReductionVariant::kSubdivision;
  } else {
    parse_error("unknown reduction variant '" + variant + "'");
  }
  map.original = instance_from_json(field(j, "original"));
  map.reduced = instance_from_json(field(j, "instance"));
  const Network& reduced = map.reduced.network();
  const Network& original = map.original.network();
  for (NodeId v = 0; v < original.num_nodes(); ++v) {
    if (v >= reduced.num_nodes() || reduced.label(v) != original.label(v)) {
      parse_error("reduced instance must list the original nodes first, in order");
    }
  }
  for (const auto& c : field(j, "chains")) {
    SplitChain chain{node_of(original, field(c, "terminal")), {}};
    for (const auto& s : field(c, "sub_terminals")) chain.sub_terminals.push_back(node_of(reduced, s));
    map.chains.push_back(std::move(chain));
  }
  map.edge_provenance.assign(reduced.num_edges(), std::nullopt);
  for (const auto& p : field(j, "edge_provenance")) {
    EdgeId e = edge_of(reduced, field(p, "edge"));
    const Json& origin = field(p, "original");
    if (!origin.is_null()) map.edge_provenance[e] = edge_of(original, origin);
  }
  return map;
}

ExperimentConfig experiment_config_from_json(const Json& j, ExperimentConfig base) {
  if (!j.is_object()) parse_error("experiment config must be a JSON object");
  if (j.contains("family")) {
    auto family = parse_family(j.at("family").get<std::string>());
    if (!family) parse_error("unknown family '" + j.at("family").get<std::string>() + "'");
    base.family = *family;
  }
  base.min_size = j.value("min_size", base.min_size);
  base.max_size = j.value("max_size", base.max_size);
  base.instances_per_size = j.value("instances_per_size", base.instances_per_size);
  base.seed = j.value("seed", base.seed);
  base.costs.lo = j.value("cost_min", base.costs.lo);
  base.costs.hi = j.value("cost_max", base.costs.hi);
  base.ties_stress = j.value("ties_stress", base.ties_stress);
  base.bound_max = j.value("bound_max", base.bound_max);
  base.extra_nodes_max = j.value("extra_nodes_max", base.extra_nodes_max);
  base.edge_percent = j.value("edge_percent", base.edge_percent);
  base.budget = j.value("budget", base.budget);
  if (base.costs.lo < 0 || base.costs.hi < base.costs.lo) parse_error("invalid cost range");
  if (base.bound_max < 1 || base.budget < 1 || base.instances_per_size < 0) {
    parse_error("bounds, budgets and counts must be positive");
  }
  if (base.min_size < 2) {
    parse_error("instances need at least two terminals");
  }
  return base;
}

Json record_to_json(const ConjectureRecord& record) {
  Json out = {{"index", record.index},
              {"family", std::string(to_string(record.family))},
              {"size", record.size},
              {"seed", record.seed},
              {"status", std::string(to_string(record.status))},
              {"reduced", record.reduced},
              {"svpnd_optimum", optional_number(record.svpnd_optimum)},
              {"tree_optimum", optional_number(record.tree_optimum)},
              {"heuristic_tree", optional_number(record.heuristic_tree)},
              {"pr_minimum", optional_number(record.pr_minimum)},
              {"lemma1_bound", optional_number(record.lemma1_bound)},
              {"lemma1_tight", record.lemma1_tight},
              {"chain_holds", record.chain_holds},
              {"conjecture1", record.conjecture1},
              {"conjecture2", record.conjecture2},
              {"claims_hold", record.claims_hold},
              {"notes", record.notes}};
  out["ring_oracle"] = record.ring_oracle ? Json(*record.ring_oracle) : Json(nullptr);
  out["reduction_round_trip"] =
      record.reduction_round_trip ? Json(*record.reduction_round_trip) : Json(nullptr);
  if (record.status == RecordStatus::kCounterexample || record.status == RecordStatus::kBug) {
    out["instance"] = instance_to_json(record.instance);
  }
  return out;
}

Json summary_to_json(const ExperimentSummary& summary) {
  return {{"summary",
           {{"instances", summary.instances},
            {"ok", summary.ok},
            {"budget_exceeded", summary.budget_exceeded},
            {"counterexamples", summary.counterexamples},
            {"bugs", summary.bugs},
            {"aborted", summary.aborted}}}};
}

}  // namespace svpnd
