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

#include "svpnd/cli.hpp"

#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "svpnd/dot.hpp"
#include "svpnd/error.hpp"
#include "svpnd/io.hpp"

namespace svpnd::cli {
namespace {

struct Options {
  std::string instance;
  std::string solution;
  std::string reduction;
  std::string config;
  std::string source;
  std::string format = "json";
  std::string variant = "subdivision";
  std::string policy = "smallest";
  std::uint64_t budget = kDefaultBudget;
  bool oracle = false;
  bool trails = false;

  // experiment overrides
  std::string family;
  int min_size = -1;
  int max_size = -1;
  int count = -1;
  std::int64_t seed = -1;
  std::int64_t bound_max = -1;
  int extra_nodes = -1;
  bool ties = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance load_instance(const Options& o) {
  if (o.instance.empty()) throw UsageError("--instance is required");
  return instance_from_json(read_json_file(o.instance));
}

Json load_solution(const Options& o) {
  if (o.solution.empty()) throw UsageError("--solution is required");
  return read_json_file(o.solution);
}

NodeId pick_source(const Instance& instance, const Options& o) {
  if (o.source.empty()) return instance.terminals().front();
  auto id = instance.network().find_node(o.source);
  if (!id || !instance.is_terminal(*id)) throw UsageError("--source must name a terminal");
  return *id;
}

void emit_tree(const Instance& instance, const TreeSolution& tree, const Options& o, std::ostream& out) {
  if (o.format == "dot") {
    out << export_dot(instance, &tree);
  } else {
    out << tree_solution_to_json(instance, tree).dump(2) << "\n";
  }
}

int solve_tree(const Options& o, std::ostream& out, std::ostream& err) {
  Instance instance = load_instance(o);
  TreeSolution tree = optimal_tree_search(instance);
  int code = kExitOk;
  if (o.oracle) {
    TreeSolution exact = exhaustive_tree_search(instance, o.budget);
    if (tree_cost(instance, exact) == tree_cost(instance, tree)) {
      tree.certified = Certification::kExhaustive;
    } else {
      err << "shortest-path tree search (" << tree_cost(instance, tree)
          << ") differs from exhaustive search (" << tree_cost(instance, exact) << ")\n";
      tree = exact;
      code = kExitViolation;
    }
  }
  emit_tree(instance, tree, o, out);
  return code;
}

int solve_ring(const Options& o, std::ostream& out, std::ostream& err) {
  Instance instance = load_instance(o);
  if (!is_ring(instance.network())) throw Error(ErrorCode::kNotARing, "network is not a ring");
  TreeSolution tree;
  if (instance.has_unit_bounds()) {
    PrInstance pr = make_pr_instance(instance, pick_source(instance, o));
    tree = pr_tree_to_tree(pr, ring_pr_optimal(pr));
  } else {
    err << "bounds above 1: solving the subdivided unit-bound ring and lifting back\n";
    ReductionMap map = split_terminals_subdivide(instance);
    PrInstance pr = make_pr_instance(map.reduced, map.reduced.terminals().front());
    TreeSolution reduced = pr_tree_to_tree(pr, ring_pr_optimal(pr));
    tree = lift_tree_solution(map, normalize_reduced_tree(map, reduced));
  }
  if (o.oracle) {
    if (tree_cost(instance, exhaustive_tree_search(instance, o.budget)) != tree_cost(instance, tree)) {
      err << "ring solution differs from exhaustive tree search\n";
      emit_tree(instance, tree, o, out);
      return kExitViolation;
    }
    tree.certified = Certification::kExhaustive;
  }
  emit_tree(instance, tree, o, out);
  return kExitOk;
}

int pr_cost_command(const Options& o, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(o);
  PrPathSystem system = pr_system_from_json(instance, load_solution(o));
  PrInstance pr = make_pr_instance(instance, system.source);
  PrProfile profile = pr_profile(pr, system);
  const Network& net = instance.network();
  Json result = {{"source", net.label(system.source)},
                 {"cost", pr_cost(pr, system).to_string()},
                 {"is_tree", is_tree_system(net, system)},
                 {"n", Json::object()},
                 {"y", Json::object()}};
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    std::string key = net.label(net.edge(e).u) + "|" + net.label(net.edge(e).v);
    result["n"][key] = profile.n[e];
    result["y"][key] = profile.y[e];
  }
  out << result.dump(2) << "\n";
  return kExitOk;
}

int pr_brute(const Options& o, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(o);
  PrInstance pr = make_pr_instance(instance, pick_source(instance, o));
  PrPathSystem system = pr_bruteforce(pr, o.trails, o.budget);
  Json result = pr_system_to_json(pr, system);
  result["is_tree"] = is_tree_system(instance.network(), system);
  out << result.dump(2) << "\n";
  return kExitOk;
}

int reduce(const Options& o, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(o);
  ReductionMap map;
  if (o.variant == "star") {
    map = split_terminals_star(instance);
  } else {
    map = split_terminals_subdivide(instance, o.policy == "cheapest" ? EdgeChoicePolicy::kCheapestEdge
                                                                      : EdgeChoicePolicy::kSmallestEdge);
  }
  out << reduction_to_json(map).dump(2) << "\n";
  return kExitOk;
}

int lift(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.reduction.empty()) throw UsageError("--reduction is required");
  ReductionMap map = reduction_from_json(read_json_file(o.reduction));
  TreeSolution reduced = tree_solution_from_json(map.reduced, load_solution(o));
  TreeSolution normalized = normalize_reduced_tree(map, reduced);
  if (!(normalized == reduced)) err << "normalized the reduced tree before lifting\n";
  emit_tree(map.original, lift_tree_solution(map, normalized), o, out);
  return kExitOk;
}

int check_feasible_command(const Options& o, std::ostream& out, std::ostream& err) {
  Instance instance = load_instance(o);
  FeasibilityReport report = check_feasible(instance, vpn_solution_from_json(instance, load_solution(o)));
  out << feasibility_report_to_json(instance, report).dump(2) << "\n";
  if (!report.feasible) {
    err << report.violations.size() << " edge(s) cannot carry their worst-case load\n";
    return kExitViolation;
  }
  return kExitOk;
}

int lower_bound(const Options& o, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(o);
  auto cert = pr_lower_bound(instance, vpn_solution_from_json(instance, load_solution(o)));
  out << certificate_to_json(instance, cert).dump(2) << "\n";
  return kExitOk;
}

int verify_chain(const Options& o, std::ostream& out, std::ostream& err) {
  Instance instance = load_instance(o);
  if (!instance.has_unit_bounds()) {
    err << "bounds above 1: checking the subdivided unit-bound instance\n";
    instance = split_terminals_subdivide(instance).reduced;
  }
  ChainReport report = verify_equivalence_chain(instance, o.budget);
  out << chain_report_to_json(instance, report).dump(2) << "\n";
  if (!report.chain_holds || !report.tree_search_agrees) {
    err << "lower-bound chain or tree search check failed\n";
    return kExitViolation;
  }
  if (!report.conjecture1 || !report.conjecture2) {
    err << "counterexample: tree routing is not optimal on this instance\n";
    return kExitViolation;
  }
  return kExitOk;
}

int experiment(const Options& o, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  if (!o.config.empty()) config = experiment_config_from_json(read_json_file(o.config));
  Json overrides = Json::object();
  if (!o.family.empty()) overrides["family"] = o.family;
  if (o.min_size >= 0) overrides["min_size"] = o.min_size;
  if (o.max_size >= 0) overrides["max_size"] = o.max_size;
  if (o.count >= 0) overrides["instances_per_size"] = o.count;
  if (o.seed >= 0) overrides["seed"] = o.seed;
  if (o.bound_max >= 0) overrides["bound_max"] = o.bound_max;
  if (o.extra_nodes >= 0) overrides["extra_nodes_max"] = o.extra_nodes;
  if (o.ties) overrides["ties_stress"] = true;
  if (o.budget != kDefaultBudget) overrides["budget"] = o.budget;
  config = experiment_config_from_json(overrides, config);
  ExperimentSummary summary = run_experiment(config, [&](const ConjectureRecord& record) {
    out << record_to_json(record).dump() << "\n";
  });
  out << summary_to_json(summary).dump() << "\n";
  if (summary.bugs > 0) err << "a proven statement failed; see the record marked \"bug\"\n";
  if (summary.counterexamples > 0) err << summary.counterexamples << " counterexample(s) found\n";
  return summary.bugs > 0 || summary.counterexamples > 0 ? kExitViolation : kExitOk;
}

int export_dot_command(const Options& o, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(o);
  if (o.solution.empty()) {
    out << export_dot(instance);
  } else {
    TreeSolution tree = tree_solution_from_json(instance, load_solution(o));
    out << export_dot(instance, &tree);
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tree routing toolkit for symmetric hose-model VPN design", "svpnd"};
  app.require_subcommand(1);
  using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };
  auto with_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "instance JSON file")->required();
    return sub;
  };
  auto with_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
  };
  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* st = with_instance(add("solve-tree", "minimum-cost tree solution", solve_tree));
  st->add_flag("--oracle", o.oracle, "cross-check against exhaustive tree search");
  with_budget(st);
  with_format(st);

  auto* sr = with_instance(add("solve-ring", "optimal tree solution on a ring", solve_ring));
  sr->add_option("--source", o.source, "source terminal label");
  sr->add_flag("--oracle", o.oracle, "cross-check against exhaustive tree search");
  with_budget(sr);
  with_format(sr);

  auto* pc = with_instance(add("pr-cost", "cost and profile of a pyramidal routing", pr_cost_command));
  pc->add_option("--solution", o.solution, "path system JSON file")->required();

  auto* pb = with_instance(add("pr-brute", "brute-force pyramidal routing optimum", pr_brute));
  pb->add_option("--source", o.source, "source terminal label");
  pb->add_flag("--trails", o.trails, "allow trails instead of simple paths");
  with_budget(pb);

  auto* rd = with_instance(add("reduce", "split terminals into unit-bound sub-terminals", reduce));
  rd->add_option("--variant", o.variant, "star or subdivision")->check(CLI::IsMember({"star", "subdivision"}));
  rd->add_option("--policy", o.policy, "edge to subdivide")->check(CLI::IsMember({"smallest", "cheapest"}));

  auto* lf = add("lift", "map a reduced tree solution back", lift);
  lf->add_option("--reduction", o.reduction, "output of the reduce command")->required();
  lf->add_option("--solution", o.solution, "tree solution on the reduced instance")->required();
  with_format(lf);

  auto* cf = with_instance(add("check-feasible", "worst-case load check", check_feasible_command));
  cf->add_option("--solution", o.solution, "VPN or tree solution JSON file")->required();

  auto* lb = with_instance(add("lower-bound", "pyramidal lower-bound certificate", lower_bound));
  lb->add_option("--solution", o.solution, "VPN or tree solution JSON file")->required();

  auto* vc = with_instance(add("verify-chain", "brute-force check of the lower-bound chain", verify_chain));
  with_budget(vc);

  auto* ex = add("experiment", "batch conjecture checks", experiment);
  ex->add_option("--config", o.config, "experiment config JSON file");
  ex->add_option("--family", o.family, "ring, complete or random_connected");
  ex->add_option("--min-size", o.min_size, "smallest size");
  ex->add_option("--max-size", o.max_size, "largest size");
  ex->add_option("--count", o.count, "instances per size");
  ex->add_option("--seed", o.seed, "random seed");
  ex->add_option("--bound-max", o.bound_max, "largest terminal bound");
  ex->add_option("--extra-nodes", o.extra_nodes, "non-terminals per ring, at most");
  ex->add_flag("--ties", o.ties, "draw costs from [1, 3]");
  with_budget(ex);

  auto* ed = with_instance(add("export-dot", "Graphviz rendering", export_dot_command));
  ed->add_option("--solution", o.solution, "tree solution JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for the list of commands\n";
    return kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, out, err);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const Error& e) {
      err << to_string(e.code()) << ": " << e.what() << "\n";
      if (e.code() == ErrorCode::kBudgetExceeded) return kExitBudget;
      if (e.code() == ErrorCode::kInfeasibleInput) return kExitViolation;
      return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
      err << "ParseError: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::overflow_error& e) {
      err << "arithmetic overflow: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "invalid input: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::logic_error& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitViolation;
    }
  }
  return kExitUsage;
}

}  // namespace svpnd::cli
