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

#include "svpnd/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "svpnd/error.hpp"

namespace svpnd {
namespace {

// Edmonds-Karp on a dense matrix; BFS scans vertices by increasing index.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : n_(n), cap_(n * n, 0), flow_(n * n, 0) {}

  void add(int u, int v, std::int64_t c) { cap_[u * n_ + v] += c; }
  std::int64_t flow(int u, int v) const { return flow_[u * n_ + v]; }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    std::vector<int> parent(n_);
    for (;;) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::queue<int> queue;
      queue.push(s);
      while (!queue.empty() && parent[t] < 0) {
        int u = queue.front();
        queue.pop();
        for (int v = 0; v < n_; ++v) {
          if (parent[v] < 0 && residual(u, v) > 0) {
            parent[v] = u;
            queue.push(v);
          }
        }
      }
      if (parent[t] < 0) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = t; v != s; v = parent[v]) push = std::min(push, residual(parent[v], v));
      for (int v = t; v != s; v = parent[v]) {
        int u = parent[v];
        // Cancel reverse flow first so flow(u, v) stays a plain edge flow.
        std::int64_t cancel = std::min(push, flow_[v * n_ + u]);
        flow_[v * n_ + u] -= cancel;
        flow_[u * n_ + v] += push - cancel;
      }
      total += push;
    }
  }

 private:
  std::int64_t residual(int u, int v) const {
    return cap_[u * n_ + v] - flow_[u * n_ + v] + flow_[v * n_ + u];
  }

  int n_;
  std::vector<std::int64_t> cap_;
  std::vector<std::int64_t> flow_;
};

struct DoubleCover {
  MaxFlow network;
  int size;
  std::int64_t value;
};

// Source 0, left copies 1..V, right copies V+1..2V, sink 2V+1.
DoubleCover solve_double_cover(const DemandGraph& graph) {
  const int v = static_cast<int>(graph.vertices.size());
  const int sink = 2 * v + 1;
  std::int64_t unbounded = std::accumulate(graph.budgets.begin(), graph.budgets.end(), std::int64_t{0});
  MaxFlow flow(2 * v + 2);
  for (int i = 0; i < v; ++i) {
    flow.add(0, 1 + i, graph.budgets[i]);
    flow.add(1 + v + i, sink, graph.budgets[i]);
  }
  for (auto [a, b] : graph.demand_edges) {
    flow.add(1 + a, 1 + v + b, unbounded);
    flow.add(1 + b, 1 + v + a, unbounded);
  }
  std::int64_t value = flow.run(0, sink);
  return {std::move(flow), v, value};
}

}  // namespace

DemandGraph make_demand_graph(const Instance& instance, std::span<const NodePair> pairs) {
  DemandGraph graph;
  graph.vertices = instance.terminals();
  for (NodeId t : graph.vertices) graph.budgets.push_back(instance.bound(t));
  for (const auto& [a, b] : pairs) {
    int ia = instance.terminal_index(a);
    int ib = instance.terminal_index(b);
    if (ia < 0 || ib < 0 || ia == ib) {
      throw Error(ErrorCode::kUnknownTerminal, "demand pair does not join two terminals");
    }
    graph.demand_edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(graph.demand_edges.begin(), graph.demand_edges.end());
  graph.demand_edges.erase(std::unique(graph.demand_edges.begin(), graph.demand_edges.end()),
                           graph.demand_edges.end());
  return graph;
}

std::int64_t doubled_worst_case_load(const DemandGraph& graph) {
  if (graph.demand_edges.empty()) return 0;
  return solve_double_cover(graph).value;
}

Rational worst_case_load(const DemandGraph& graph) {
  return Rational(doubled_worst_case_load(graph), 2);
}

DemandSet extract_witness(const DemandGraph& graph) {
  DemandSet out;
  if (graph.demand_edges.empty()) return out;
  DoubleCover cover = solve_double_cover(graph);
  const int v = cover.size;
  for (auto [a, b] : graph.demand_edges) {
    std::int64_t twice = cover.network.flow(1 + a, 1 + v + b) + cover.network.flow(1 + b, 1 + v + a);
    if (twice > 0) out.set(graph.vertices[a], graph.vertices[b], Rational(twice, 2));
  }
  return out;
}

std::vector<std::vector<NodePair>> pairs_per_edge(const Instance& instance,
                                                  const std::map<NodePair, Path>& paths) {
  const Network& net = instance.network();
  const auto& terminals = instance.terminals();
  std::vector<std::vector<NodePair>> out(net.num_edges());
  for (std::size_t a = 0; a < terminals.size(); ++a) {
    for (std::size_t b = a + 1; b < terminals.size(); ++b) {
      NodePair key = make_node_pair(terminals[a], terminals[b]);
      auto it = paths.find(key);
      if (it == paths.end()) {
        throw Error(ErrorCode::kMissingPairPath,
                    "no path for pair {" + net.label(key.first) + "," + net.label(key.second) + "}");
      }
      const Path& path = it->second;
      if (!path.nodes.empty() && path.front() == key.second) {
        check_path(net, path, key.second, key.first);
      } else {
        check_path(net, path, key.first, key.second);
      }
      for (EdgeId e : path_edges(net, path)) out[e].push_back(key);
    }
  }
  return out;
}

std::vector<Rational> worst_case_loads(const Instance& instance,
                                       const std::map<NodePair, Path>& paths) {
  auto per_edge = pairs_per_edge(instance, paths);
  std::vector<Rational> loads;
  loads.reserve(per_edge.size());
  for (const auto& pairs : per_edge) {
    loads.push_back(worst_case_load(make_demand_graph(instance, pairs)));
  }
  return loads;
}

FeasibilityReport check_feasible(const Instance& instance, const VpnSolution& solution) {
  auto per_edge = pairs_per_edge(instance, solution.paths);
  FeasibilityReport report;
  for (EdgeId e = 0; e < instance.network().num_edges(); ++e) {
    DemandGraph graph = make_demand_graph(instance, per_edge[e]);
    Rational load = worst_case_load(graph);
    Rational capacity = e < static_cast<EdgeId>(solution.capacities.size()) ? solution.capacities[e]
                                                                              : Rational{};
    if (load > capacity) {
      report.feasible = false;
      report.violations.push_back({e, load, capacity, extract_witness(graph)});
    }
    report.loads.push_back(load);
  }
  return report;
}

}  // namespace svpnd
