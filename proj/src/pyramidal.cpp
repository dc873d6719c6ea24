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

#include "svpnd/pyramidal.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "svpnd/error.hpp"

namespace svpnd {
namespace {

int pyramid(int n, int k) { return std::min(n, k - n); }

struct Arc {
  std::vector<NodeId> nodes;  // t_l ... t_{l+1}
  Rational cost;
};

// Walks the ring from the smallest terminal towards its smaller-id
// neighbour and cuts it into terminal-to-terminal arcs.
std::vector<Arc> ring_arcs(const Instance& instance) {
  const Network& net = instance.network();
  if (!is_ring(net)) throw Error(ErrorCode::kNotARing, "network is not a ring");
  if (instance.num_terminals() < 2) {
    throw Error(ErrorCode::kAllNodesNonterminal, "ring has fewer than two terminals");
  }
  NodeId start = instance.terminals().front();
  std::vector<NodeId> cycle{start};
  std::vector<EdgeId> cycle_edges;
  NodeId prev = -1;
  NodeId cur = start;
  for (int step = 0; step < net.num_nodes(); ++step) {
    auto nbrs = net.neighbors(cur);
    const Incidence& next = (nbrs[0].node != prev || step == 0) ? nbrs[0] : nbrs[1];
    cycle_edges.push_back(next.edge);
    prev = cur;
    cur = next.node;
    cycle.push_back(cur);
  }
  std::vector<Arc> arcs;
  Arc current{{start}, Rational{}};
  for (std::size_t s = 0; s < cycle_edges.size(); ++s) {
    current.nodes.push_back(cycle[s + 1]);
    current.cost += net.cost(cycle_edges[s]);
    if (instance.is_terminal(cycle[s + 1])) {
      arcs.push_back(std::move(current));
      current = Arc{{cycle[s + 1]}, Rational{}};
    }
  }
  return arcs;
}

}  // namespace

PrInstance make_pr_instance(Instance instance, NodeId source) {
  if (!instance.has_unit_bounds()) {
    throw Error(ErrorCode::kNonUnitBounds,
                "pyramidal routing needs unit bounds; reduce the instance first");
  }
  if (source < 0 || source >= instance.network().num_nodes() || !instance.is_terminal(source)) {
    throw Error(ErrorCode::kUnknownTerminal, "source is not a terminal");
  }
  return PrInstance{std::move(instance), source};
}

PrProfile pr_profile(const PrInstance& pr, const PrPathSystem& system) {
  const Network& net = pr.instance.network();
  const int k = pr.instance.num_terminals();
  if (system.source != pr.source) {
    throw Error(ErrorCode::kPathEndpointMismatch, "system source differs from instance source");
  }
  PrProfile profile{std::vector<int>(net.num_edges(), 0), {}};
  for (NodeId t : pr.instance.terminals()) {
    if (t == pr.source) continue;
    auto it = system.paths.find(t);
    if (it == system.paths.end()) {
      throw Error(ErrorCode::kPathEndpointMismatch, "no path to terminal " + net.label(t));
    }
    check_path(net, it->second, pr.source, t);
    for (EdgeId e : path_edges(net, it->second)) ++profile.n[e];
  }
  if (static_cast<int>(system.paths.size()) != k - 1) {
    throw Error(ErrorCode::kPathEndpointMismatch, "system has paths to non-terminals");
  }
  profile.y.resize(net.num_edges());
  for (EdgeId e = 0; e < net.num_edges(); ++e) profile.y[e] = pyramid(profile.n[e], k);
  return profile;
}

Rational pr_cost(const PrInstance& pr, const PrPathSystem& system) {
  PrProfile profile = pr_profile(pr, system);
  Rational total;
  for (EdgeId e = 0; e < pr.instance.network().num_edges(); ++e) {
    if (profile.y[e] != 0) total += pr.instance.network().cost(e) * Rational(profile.y[e]);
  }
  return total;
}

bool is_tree_system(const Network& network, const PrPathSystem& system) {
  std::vector<bool> used(network.num_edges(), false);
  std::vector<bool> touched(network.num_nodes(), false);
  int edges = 0;
  for (const auto& [t, path] : system.paths) {
    for (EdgeId e : path_edges(network, path)) {
      if (!used[e]) {
        used[e] = true;
        ++edges;
      }
    }
    for (NodeId v : path.nodes) touched[v] = true;
  }
  touched[system.source] = true;
  // Every path starts at the source, so the union is connected; it is a tree
  // iff |E| = |V| - 1.
  int nodes = static_cast<int>(std::count(touched.begin(), touched.end(), true));
  return edges == nodes - 1;
}

PrPathSystem pr_bruteforce(const PrInstance& pr, bool allow_trails, std::uint64_t budget) {
  const Network& net = pr.instance.network();
  const int k = pr.instance.num_terminals();
  std::vector<NodeId> targets;
  for (NodeId t : pr.instance.terminals()) {
    if (t != pr.source) targets.push_back(t);
  }
  std::vector<std::vector<Path>> options;
  std::vector<std::vector<std::vector<EdgeId>>> option_edges;
  std::uint64_t combos = 1;
  for (NodeId t : targets) {
    options.push_back(enumerate_paths(net, pr.source, t, allow_trails, budget));
    auto& edges = option_edges.emplace_back();
    for (const auto& p : options.back()) edges.push_back(path_edges(net, p));
    if (combos > budget / options.back().size()) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "path system count exceeds budget of " + std::to_string(budget));
    }
    combos *= options.back().size();
  }

  ScaledCosts costs(net);
  std::vector<int> n(net.num_edges(), 0);
  __int128 total = 0;
  auto shift = [&](const std::vector<EdgeId>& edges, int delta) {
    for (EdgeId e : edges) {
      total -= static_cast<__int128>(costs[e]) * pyramid(n[e], k);
      n[e] += delta;
      total += static_cast<__int128>(costs[e]) * pyramid(n[e], k);
    }
  };
  std::vector<std::size_t> index(targets.size(), 0);
  for (std::size_t d = 0; d < targets.size(); ++d) shift(option_edges[d][0], +1);
  std::vector<std::size_t> best_index = index;
  __int128 best_total = total;
  // Odometer with the last terminal as the fastest digit: lexicographic.
  auto advance = [&] {
    for (std::size_t d = targets.size(); d-- > 0;) {
      shift(option_edges[d][index[d]], -1);
      if (++index[d] < options[d].size()) {
        shift(option_edges[d][index[d]], +1);
        return true;
      }
      index[d] = 0;
      shift(option_edges[d][0], +1);
    }
    return false;
  };
  while (advance()) {
    if (total < best_total) {
      best_total = total;
      best_index = index;
    }
  }

  PrPathSystem out{pr.source, {}};
  for (std::size_t d = 0; d < targets.size(); ++d) {
    out.paths.emplace(targets[d], options[d][best_index[d]]);
  }
  return out;
}

RingContraction contract_nonterminals_on_ring(const Instance& instance) {
  std::vector<Arc> arcs = ring_arcs(instance);
  if (arcs.size() == 2) {
    throw Error(ErrorCode::kDegenerateRing,
                "contracting leaves two terminals joined by two parallel arcs");
  }
  const Network& net = instance.network();
  RingContraction out;
  out.original_node = instance.terminals();
  std::vector<int> new_id(net.num_nodes(), -1);
  std::vector<std::string> labels;
  std::vector<std::int64_t> bounds;
  for (std::size_t j = 0; j < out.original_node.size(); ++j) {
    new_id[out.original_node[j]] = static_cast<int>(j);
    labels.push_back(net.label(out.original_node[j]));
    bounds.push_back(instance.bound(out.original_node[j]));
  }
  std::vector<EdgeSpec> edges;
  for (const Arc& arc : arcs) {
    NodeId a = new_id[arc.nodes.front()];
    NodeId b = new_id[arc.nodes.back()];
    edges.push_back({a, b, arc.cost});
    std::vector<NodeId> seq = arc.nodes;
    if (a > b) std::reverse(seq.begin(), seq.end());
    out.arcs.emplace(make_node_pair(a, b), std::move(seq));
  }
  out.contracted = Instance(Network(std::move(labels), std::move(edges)), std::move(bounds));
  return out;
}

PrPathSystem ring_pr_optimal(const PrInstance& pr) {
  std::vector<Arc> arcs = ring_arcs(pr.instance);
  const int k = static_cast<int>(arcs.size());

  // Deleting arc d leaves the terminal path t_{d+1}, ..., t_{d+k}; the p-th
  // arc on it separates p+1 terminals from the other k-p-1.
  int best = -1;
  Rational best_cost;
  NodePair best_key;
  for (int d = 0; d < k; ++d) {
    Rational cost;
    for (int p = 0; p + 1 < k; ++p) {
      cost += arcs[(d + 1 + p) % k].cost * Rational(pyramid(p + 1, k));
    }
    NodePair key = make_node_pair(arcs[d].nodes.front(), arcs[d].nodes.back());
    if (best < 0 || cost < best_cost || (cost == best_cost && key < best_key)) {
      best = d;
      best_cost = cost;
      best_key = key;
    }
  }

  // Terminal order along the surviving path and the arcs between them.
  std::vector<NodeId> order;
  for (int p = 0; p < k; ++p) order.push_back(arcs[(best + 1 + p) % k].nodes.front());
  auto source_pos = std::find(order.begin(), order.end(), pr.source) - order.begin();

  PrPathSystem out{pr.source, {}};
  for (int q = 0; q < k; ++q) {
    if (q == source_pos) continue;
    Path path{{pr.source}, false};
    if (q > source_pos) {
      for (int p = static_cast<int>(source_pos); p < q; ++p) {
        const auto& nodes = arcs[(best + 1 + p) % k].nodes;
        path.nodes.insert(path.nodes.end(), nodes.begin() + 1, nodes.end());
      }
    } else {
      for (int p = static_cast<int>(source_pos) - 1; p >= q; --p) {
        const auto& nodes = arcs[(best + 1 + p) % k].nodes;
        path.nodes.insert(path.nodes.end(), nodes.rbegin() + 1, nodes.rend());
      }
    }
    out.paths.emplace(order[q], std::move(path));
  }
  return out;
}

PrPathSystem tree_to_pr(const Instance& instance, const TreeSolution& tree, NodeId source) {
  PrInstance pr = make_pr_instance(instance, source);
  auto paths = tree_paths_from(instance.network(), tree.tree_edges, source);
  PrPathSystem out{source, {}};
  for (NodeId t : instance.terminals()) {
    if (t == source) continue;
    auto it = paths.find(t);
    if (it == paths.end()) {
      throw Error(ErrorCode::kTerminalNotSpanned, "tree does not reach " + instance.network().label(t));
    }
    out.paths.emplace(t, it->second);
  }
  return out;
}

TreeSolution pr_tree_to_tree(const PrInstance& pr, const PrPathSystem& system) {
  const Network& net = pr.instance.network();
  pr_profile(pr, system);
  if (!is_tree_system(net, system)) {
    throw Error(ErrorCode::kNotATreeSystem, "paths of the system do not form a tree");
  }
  std::vector<EdgeId> edges;
  for (const auto& [t, path] : system.paths) {
    auto pe = path_edges(net, path);
    edges.insert(edges.end(), pe.begin(), pe.end());
  }
  return tree_capacities(pr.instance, edges);
}

}  // namespace svpnd
