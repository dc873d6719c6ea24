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

#include "svpnd/lab.hpp"

#include <algorithm>
#include <unordered_map>

#include "svpnd/certificates.hpp"
#include "svpnd/error.hpp"
#include "svpnd/feasibility.hpp"
#include "svpnd/pyramidal.hpp"
#include "svpnd/reduction.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {

VpnSolution bruteforce_svpnd(const Instance& instance, std::uint64_t budget) {
  if (!instance.has_unit_bounds()) {
    throw Error(ErrorCode::kNonUnitBounds, "brute force needs unit bounds; reduce the instance first");
  }
  const Network& net = instance.network();
  const auto& terminals = instance.terminals();
  std::vector<NodePair> pairs;
  for (std::size_t a = 0; a < terminals.size(); ++a) {
    for (std::size_t b = a + 1; b < terminals.size(); ++b) {
      pairs.push_back(make_node_pair(terminals[a], terminals[b]));
    }
  }
  if (pairs.size() > 64) {
    throw Error(ErrorCode::kBudgetExceeded, "brute force supports at most 64 terminal pairs");
  }

  std::vector<std::vector<Path>> options;
  std::vector<std::vector<std::vector<EdgeId>>> option_edges;
  std::uint64_t combos = 1;
  for (const auto& [a, b] : pairs) {
    options.push_back(enumerate_paths(net, a, b, false, budget));
    auto& edges = option_edges.emplace_back();
    for (const auto& p : options.back()) edges.push_back(path_edges(net, p));
    if (combos > budget / options.back().size()) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "routing count exceeds budget of " + std::to_string(budget));
    }
    combos *= options.back().size();
  }

  // The worst-case load of an edge depends only on the set of pairs routed
  // over it, encoded as a bit mask.
  std::unordered_map<std::uint64_t, std::int64_t> doubled_load{{0, 0}};
  auto load_of = [&](std::uint64_t mask) {
    auto it = doubled_load.find(mask);
    if (it != doubled_load.end()) return it->second;
    std::vector<NodePair> routed;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) routed.push_back(pairs[p]);
    }
    std::int64_t value = doubled_worst_case_load(make_demand_graph(instance, routed));
    doubled_load.emplace(mask, value);
    return value;
  };

  ScaledCosts costs(net);
  std::vector<std::uint64_t> mask(net.num_edges(), 0);
  std::vector<__int128> contribution(net.num_edges(), 0);
  __int128 total = 0;
  auto toggle = [&](std::size_t p, const std::vector<EdgeId>& edges) {
    for (EdgeId e : edges) mask[e] ^= std::uint64_t{1} << p;
  };
  auto refresh = [&](const std::vector<EdgeId>& edges) {
    for (EdgeId e : edges) {
      total -= contribution[e];
      contribution[e] = static_cast<__int128>(costs[e]) * load_of(mask[e]);
      total += contribution[e];
    }
  };
  std::vector<std::size_t> index(pairs.size(), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) toggle(p, option_edges[p][0]);
  for (std::size_t p = 0; p < pairs.size(); ++p) refresh(option_edges[p][0]);

  auto replace = [&](std::size_t p, std::size_t next) {
    const auto& old_edges = option_edges[p][index[p]];
    const auto& new_edges = option_edges[p][next];
    toggle(p, old_edges);
    toggle(p, new_edges);
    index[p] = next;
    refresh(old_edges);
    refresh(new_edges);
  };
  auto advance = [&] {
    for (std::size_t p = pairs.size(); p-- > 0;) {
      if (index[p] + 1 < options[p].size()) {
        replace(p, index[p] + 1);
        return true;
      }
      replace(p, 0);
    }
    return false;
  };

  std::vector<std::size_t> best_index = index;
  __int128 best_total = total;
  while (advance()) {
    if (total < best_total) {
      best_total = total;
      best_index = index;
    }
  }

  VpnSolution out;
  for (std::size_t p = 0; p < pairs.size(); ++p) out.paths.emplace(pairs[p], options[p][best_index[p]]);
  out.capacities = worst_case_loads(instance, out.paths);
  return out;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return labels;
}

Rational draw_cost(Rng& rng, CostRange costs) { return Rational(rng.uniform(costs.lo, costs.hi)); }

template <typename T>
void shuffle(Rng& rng, std::vector<T>& items) {
  for (std::size_t s = items.size(); s > 1; --s) {
    std::swap(items[s - 1], items[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s) - 1))]);
  }
}

}  // namespace

Instance make_ring(const std::vector<Rational>& costs, const std::vector<std::int64_t>& bounds) {
  const int n = static_cast<int>(costs.size());
  RawInstance raw;
  raw.nodes = numbered_labels(n);
  for (int l = 0; l < n; ++l) raw.edges.push_back({raw.nodes[l], raw.nodes[(l + 1) % n], costs[l]});
  for (int v = 0; v < n; ++v) {
    if (bounds[v] > 0) raw.terminals.push_back({raw.nodes[v], bounds[v]});
  }
  return validate_instance(raw);
}

Instance random_ring(Rng& rng, int terminals, int extra_nodes, CostRange costs, std::int64_t bound_max) {
  if (terminals + extra_nodes < 3) extra_nodes = 3 - terminals;
  const int n = terminals + extra_nodes;
  std::vector<std::int64_t> bounds(n, 0);
  for (int v = 0; v < terminals; ++v) bounds[v] = 1;
  shuffle(rng, bounds);
  for (auto& b : bounds) {
    if (b > 0) b = rng.uniform(1, bound_max);
  }
  std::vector<Rational> edge_costs;
  for (int l = 0; l < n; ++l) edge_costs.push_back(draw_cost(rng, costs));
  return make_ring(edge_costs, bounds);
}

Instance random_complete(Rng& rng, int nodes, CostRange costs, std::int64_t bound_max) {
  RawInstance raw;
  raw.nodes = numbered_labels(nodes);
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) raw.edges.push_back({raw.nodes[a], raw.nodes[b], draw_cost(rng, costs)});
  }
  for (int v = 0; v < nodes; ++v) raw.terminals.push_back({raw.nodes[v], rng.uniform(1, bound_max)});
  return validate_instance(raw);
}

Instance random_connected(Rng& rng, int nodes, int edge_percent, CostRange costs, std::int64_t bound_max) {
  RawInstance raw;
  raw.nodes = numbered_labels(nodes);
  std::vector<std::vector<bool>> present(nodes, std::vector<bool>(nodes, false));
  for (int v = 1; v < nodes; ++v) {
    int u = static_cast<int>(rng.uniform(0, v - 1));
    present[u][v] = true;
  }
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (!present[a][b] && rng.uniform(0, 99) < edge_percent) present[a][b] = true;
      if (present[a][b]) raw.edges.push_back({raw.nodes[a], raw.nodes[b], draw_cost(rng, costs)});
    }
  }
  std::vector<int> order(nodes);
  for (int v = 0; v < nodes; ++v) order[v] = v;
  shuffle(rng, order);
  int count = static_cast<int>(rng.uniform(2, nodes));
  std::sort(order.begin(), order.begin() + count);
  for (int s = 0; s < count; ++s) raw.terminals.push_back({raw.nodes[order[s]], rng.uniform(1, bound_max)});
  return validate_instance(raw);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kRing: return "ring";
    case Family::kComplete: return "complete";
    case Family::kRandomConnected: return "random_connected";
  }
  return "ring";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::kRing, Family::kComplete, Family::kRandomConnected}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kBudgetExceeded: return "budget_exceeded";
    case RecordStatus::kCounterexample: return "counterexample";
    case RecordStatus::kBug: return "bug";
  }
  return "ok";
}

namespace {

void flag_bug(ConjectureRecord& record, std::string note) {
  record.status = RecordStatus::kBug;
  record.notes.push_back(std::move(note));
}

void run_battery(ConjectureRecord& record, const Instance& unit, std::uint64_t budget) {
  const Network& net = unit.network();
  VpnSolution best = bruteforce_svpnd(unit, budget);
  ChainReport chain = verify_equivalence_chain(unit, best, budget);
  record.svpnd_optimum = chain.svpnd_optimum;
  record.tree_optimum = chain.tree_optimum;
  record.heuristic_tree = chain.heuristic_tree;
  record.pr_minimum = chain.pr_minimum;
  record.chain_holds = chain.chain_holds;
  record.conjecture1 = chain.conjecture1;
  record.conjecture2 = chain.conjecture2;

  LowerBoundCertificate cert = pr_lower_bound(unit, best);
  record.lemma1_bound = cert.bound;
  record.lemma1_tight = cert.bound == chain.svpnd_optimum;

  record.claims_hold = true;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    Claim2Result claim2 = verify_claim2(unit, best, e);
    if (!verify_claim1(unit, cert.witness_demands.at(e)) || !claim2.holds ||
        claim2.witness_load != claim2.average_height) {
      record.claims_hold = false;
    }
  }

  if (!record.claims_hold) flag_bug(record, "witness demand claims violated");
  if (!chain.chain_holds) flag_bug(record, "lower-bound chain violated");
  if (!chain.tree_search_agrees) flag_bug(record, "shortest-path tree search missed the optimal tree");

  if (is_ring(net)) {
    bool agrees = true;
    for (NodeId source : unit.terminals()) {
      PrInstance pr = make_pr_instance(unit, source);
      if (pr_cost(pr, ring_pr_optimal(pr)) != chain.pr_optimum_by_source.at(source)) agrees = false;
    }
    record.ring_oracle = agrees && chain.conjecture1 && chain.conjecture2;
    if (!*record.ring_oracle) flag_bug(record, "ring optimality violated");
  } else if (record.status == RecordStatus::kOk && (!chain.conjecture1 || !chain.conjecture2)) {
    record.status = RecordStatus::kCounterexample;
    record.notes.push_back(!chain.conjecture1 ? "no optimal VPN is a tree" : "a PR optimum beats every tree");
  }
}

}  // namespace

ConjectureRecord check_instance(const Instance& instance, std::uint64_t budget) {
  ConjectureRecord record;
  record.instance = instance;
  try {
    Instance unit = instance;
    if (!instance.has_unit_bounds()) {
      record.reduced = true;
      ReductionMap map = split_terminals_subdivide(instance);
      Rational original = tree_cost(instance, exhaustive_tree_search(instance, budget));
      TreeSolution reduced_tree = optimal_tree_search(map.reduced);
      TreeSolution lifted = lift_tree_solution(map, normalize_reduced_tree(map, reduced_tree));
      bool ok = tree_cost(map.reduced, reduced_tree) == original &&
                tree_cost(instance, lifted) == original &&
                is_ring(instance.network()) == is_ring(map.reduced.network());
      record.reduction_round_trip = ok;
      if (!ok) flag_bug(record, "reduction round trip changed the optimal tree cost");
      unit = map.reduced;
    }
    run_battery(record, unit, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    record.status = RecordStatus::kBudgetExceeded;
    record.notes.push_back(e.what());
  }
  return record;
}

ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 const std::function<void(const ConjectureRecord&)>& sink) {
  ExperimentSummary summary;
  CostRange costs = config.ties_stress ? CostRange{1, 3} : config.costs;
  int index = 0;
  for (int size = config.min_size; size <= config.max_size; ++size) {
    for (int r = 0; r < config.instances_per_size; ++r, ++index) {
      Rng seeder(config.seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(index + 1)));
      std::uint64_t seed = seeder.next();
      Rng rng(seed);
      Instance instance;
      switch (config.family) {
        case Family::kRing: {
          int extra = static_cast<int>(rng.uniform(0, config.extra_nodes_max));
          instance = random_ring(rng, size, extra, costs, config.bound_max);
          break;
        }
        case Family::kComplete:
          instance = random_complete(rng, size, costs, config.bound_max);
          break;
        case Family::kRandomConnected:
          instance = random_connected(rng, size, config.edge_percent, costs, config.bound_max);
          break;
      }
      ConjectureRecord record = check_instance(instance, config.budget);
      record.index = index;
      record.family = config.family;
      record.size = size;
      record.seed = seed;
      ++summary.instances;
      switch (record.status) {
        case RecordStatus::kOk: ++summary.ok; break;
        case RecordStatus::kBudgetExceeded: ++summary.budget_exceeded; break;
        case RecordStatus::kCounterexample: ++summary.counterexamples; break;
        case RecordStatus::kBug: ++summary.bugs; break;
      }
      sink(record);
      if (record.status == RecordStatus::kBug) {
        summary.aborted = true;
        return summary;
      }
    }
  }
  return summary;
}

}  // namespace svpnd
