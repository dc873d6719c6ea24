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

#include "svpnd/tree_vpn.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

#include "svpnd/error.hpp"

namespace svpnd {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Removes non-terminal leaves until none remain.
std::vector<EdgeId> prune(const Instance& instance, std::vector<EdgeId> edges) {
  const Network& net = instance.network();
  std::vector<int> degree(net.num_nodes(), 0);
  for (EdgeId e : edges) {
    ++degree[net.edge(e).u];
    ++degree[net.edge(e).v];
  }
  std::vector<bool> alive(net.num_edges(), false);
  for (EdgeId e : edges) alive[e] = true;
  std::vector<std::vector<EdgeId>> incident(net.num_nodes());
  for (EdgeId e : edges) {
    incident[net.edge(e).u].push_back(e);
    incident[net.edge(e).v].push_back(e);
  }
  std::vector<NodeId> leaves;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    if (degree[v] == 1 && !instance.is_terminal(v)) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    NodeId v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    for (EdgeId e : incident[v]) {
      if (!alive[e]) continue;
      alive[e] = false;
      --degree[v];
      NodeId w = net.edge(e).other(v);
      if (--degree[w] == 1 && !instance.is_terminal(w)) leaves.push_back(w);
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    if (alive[e]) out.push_back(e);
  }
  return out;
}

// Tree cost in scaled integer units.
__int128 scaled_cost(const ScaledCosts& costs, const TreeSolution& tree) {
  __int128 total = 0;
  for (EdgeId e : tree.tree_edges) total += static_cast<__int128>(costs[e]) * tree.capacities[e];
  return total;
}

}  // namespace

std::string_view to_string(Certification c) {
  return c == Certification::kExhaustive ? "exhaustive" : "heuristic";
}

TreeSolution tree_capacities(const Instance& instance, std::span<const EdgeId> tree_edges) {
  const Network& net = instance.network();
  std::vector<EdgeId> edges(tree_edges.begin(), tree_edges.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  DisjointSets sets(net.num_nodes());
  std::vector<bool> touched(net.num_nodes(), false);
  for (EdgeId e : edges) {
    if (e < 0 || e >= net.num_edges()) throw Error(ErrorCode::kNotATree, "unknown edge id");
    if (!sets.unite(net.edge(e).u, net.edge(e).v)) {
      throw Error(ErrorCode::kNotATree, "edge set contains a cycle");
    }
    touched[net.edge(e).u] = touched[net.edge(e).v] = true;
  }
  for (NodeId t : instance.terminals()) {
    if (!touched[t]) {
      throw Error(ErrorCode::kTerminalNotSpanned, "terminal " + net.label(t) + " is not spanned");
    }
  }
  int root_component = sets.find(instance.terminals().front());
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    if (touched[v] && sets.find(v) != root_component) {
      throw Error(ErrorCode::kNotATree, "edge set is disconnected");
    }
  }

  TreeSolution out;
  out.tree_edges = prune(instance, std::move(edges));
  out.capacities.assign(net.num_edges(), 0);

  // Subtree bound sums by iterative DFS from the first terminal.
  std::vector<std::vector<Incidence>> adj(net.num_nodes());
  for (EdgeId e : out.tree_edges) {
    adj[net.edge(e).u].push_back({net.edge(e).v, e});
    adj[net.edge(e).v].push_back({net.edge(e).u, e});
  }
  const std::int64_t total = instance.total_bound();
  NodeId root = instance.terminals().front();
  std::vector<EdgeId> parent_edge(net.num_nodes(), -1);
  std::vector<NodeId> order;
  std::vector<bool> seen(net.num_nodes(), false);
  std::vector<NodeId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& inc : adj[v]) {
      if (seen[inc.node]) continue;
      seen[inc.node] = true;
      parent_edge[inc.node] = inc.edge;
      stack.push_back(inc.node);
    }
  }
  std::vector<std::int64_t> below(net.num_nodes(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    below[v] += instance.bound(v);
    if (EdgeId e = parent_edge[v]; e >= 0) {
      out.capacities[e] = std::min(below[v], total - below[v]);
      below[net.edge(e).other(v)] += below[v];
    }
  }
  return out;
}

Rational tree_cost(const Instance& instance, const TreeSolution& tree) {
  Rational total;
  for (EdgeId e : tree.tree_edges) {
    total += instance.network().cost(e) * Rational(tree.capacities[e]);
  }
  return total;
}

TreeSolution shortest_path_tree(const Instance& instance, NodeId root) {
  const Network& net = instance.network();
  const int n = net.num_nodes();
  using Key = std::pair<Rational, int>;  // (distance, hops)
  std::vector<std::optional<Key>> dist(n);
  std::vector<bool> done(n, false);
  std::set<std::pair<Key, NodeId>> queue;
  dist[root] = Key{Rational{}, 0};
  queue.insert({*dist[root], root});
  while (!queue.empty()) {
    auto [key, v] = *queue.begin();
    queue.erase(queue.begin());
    done[v] = true;
    for (const auto& inc : net.neighbors(v)) {
      if (done[inc.node]) continue;
      Key candidate{key.first + net.cost(inc.edge), key.second + 1};
      if (!dist[inc.node] || candidate < *dist[inc.node]) {
        if (dist[inc.node]) queue.erase({*dist[inc.node], inc.node});
        dist[inc.node] = candidate;
        queue.insert({candidate, inc.node});
      }
    }
  }
  // Predecessor: smallest-id neighbour on a shortest, fewest-hop route.
  std::vector<EdgeId> pred_edge(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    for (const auto& inc : net.neighbors(v)) {
      const Key& du = *dist[inc.node];
      if (du.first + net.cost(inc.edge) == dist[v]->first && du.second + 1 == dist[v]->second) {
        pred_edge[v] = inc.edge;
        break;
      }
    }
  }
  std::vector<bool> used(net.num_edges(), false);
  for (NodeId t : instance.terminals()) {
    for (NodeId v = t; v != root; v = net.edge(pred_edge[v]).other(v)) {
      if (used[pred_edge[v]]) break;
      used[pred_edge[v]] = true;
    }
  }
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (used[e]) edges.push_back(e);
  }
  return tree_capacities(instance, edges);
}

TreeSolution optimal_tree_search(const Instance& instance) {
  ScaledCosts costs(instance.network());
  std::optional<TreeSolution> best;
  __int128 best_cost = 0;
  for (NodeId root = 0; root < instance.network().num_nodes(); ++root) {
    TreeSolution candidate = shortest_path_tree(instance, root);
    __int128 cost = scaled_cost(costs, candidate);
    if (!best || cost < best_cost ||
        (cost == best_cost && candidate.tree_edges < best->tree_edges)) {
      best = std::move(candidate);
      best_cost = cost;
    }
  }
  best->certified = Certification::kHeuristic;
  return *best;
}

namespace {

class SpanningTreeSearch {
 public:
  SpanningTreeSearch(const Instance& instance, std::uint64_t budget)
      : instance_(instance), net_(instance.network()), costs_(net_), budget_(budget) {}

  TreeSolution run() {
    std::vector<int> comp(net_.num_nodes());
    std::iota(comp.begin(), comp.end(), 0);
    visit(0, comp);
    best_->certified = Certification::kExhaustive;
    return *best_;
  }

 private:
  static int find(std::vector<int>& comp, int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  }

  bool completable(std::size_t next, std::vector<int> comp) const {
    int components = 0;
    for (int v = 0; v < net_.num_nodes(); ++v) components += comp[v] == v;
    for (EdgeId e = static_cast<EdgeId>(next); e < net_.num_edges() && components > 1; ++e) {
      int a = find(comp, net_.edge(e).u);
      int b = find(comp, net_.edge(e).v);
      if (a != b) {
        comp[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
    return components == 1;
  }

  void visit(std::size_t next, std::vector<int>& comp) {
    if (static_cast<int>(chosen_.size()) == net_.num_nodes() - 1) {
      evaluate();
      return;
    }
    if (next == static_cast<std::size_t>(net_.num_edges())) return;
    EdgeId e = static_cast<EdgeId>(next);
    int a = find(comp, net_.edge(e).u);
    int b = find(comp, net_.edge(e).v);
    if (a != b) {
      std::vector<int> joined = comp;
      joined[std::max(a, b)] = std::min(a, b);
      chosen_.push_back(e);
      visit(next + 1, joined);
      chosen_.pop_back();
    }
    if (completable(next + 1, comp)) visit(next + 1, comp);
  }

  void evaluate() {
    if (++visited_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "spanning tree enumeration exceeded budget of " + std::to_string(budget_));
    }
    TreeSolution candidate = tree_capacities(instance_, chosen_);
    __int128 cost = scaled_cost(costs_, candidate);
    if (!best_ || cost < best_cost_ ||
        (cost == best_cost_ && candidate.tree_edges < best_->tree_edges)) {
      best_ = std::move(candidate);
      best_cost_ = cost;
    }
  }

  const Instance& instance_;
  const Network& net_;
  ScaledCosts costs_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<EdgeId> chosen_;
  std::optional<TreeSolution> best_;
  __int128 best_cost_ = 0;
};

}  // namespace

TreeSolution exhaustive_tree_search(const Instance& instance, std::uint64_t budget) {
  return SpanningTreeSearch(instance, budget).run();
}

std::map<NodeId, Path> tree_paths_from(const Network& network, std::span<const EdgeId> tree_edges,
                                       NodeId source) {
  std::vector<std::vector<NodeId>> adj(network.num_nodes());
  for (EdgeId e : tree_edges) {
    adj[network.edge(e).u].push_back(network.edge(e).v);
    adj[network.edge(e).v].push_back(network.edge(e).u);
  }
  std::vector<NodeId> parent(network.num_nodes(), -1);
  std::vector<bool> seen(network.num_nodes(), false);
  std::queue<NodeId> queue;
  queue.push(source);
  seen[source] = true;
  std::map<NodeId, Path> out;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    Path path;
    for (NodeId x = v; x != -1; x = parent[x]) path.nodes.push_back(x);
    std::reverse(path.nodes.begin(), path.nodes.end());
    out.emplace(v, std::move(path));
    for (NodeId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push(w);
    }
  }
  return out;
}

VpnSolution to_vpn_solution(const Instance& instance, const TreeSolution& tree) {
  VpnSolution out;
  const auto& terminals = instance.terminals();
  for (std::size_t a = 0; a < terminals.size(); ++a) {
    auto paths = tree_paths_from(instance.network(), tree.tree_edges, terminals[a]);
    for (std::size_t b = a + 1; b < terminals.size(); ++b) {
      out.paths.emplace(make_node_pair(terminals[a], terminals[b]), paths.at(terminals[b]));
    }
  }
  out.capacities.reserve(tree.capacities.size());
  for (auto c : tree.capacities) out.capacities.emplace_back(c);
  return out;
}

}  // namespace svpnd
