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

#include "svpnd/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "svpnd/error.hpp"

namespace svpnd {

Network::Network(std::vector<std::string> labels, std::vector<EdgeSpec> edges)
    : labels_(std::move(labels)) {
  const int n = num_nodes();
  for (NodeId v = 0; v < n; ++v) node_index_.emplace(labels_[v], v);
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return make_node_pair(a.u, a.v) < make_node_pair(b.u, b.v);
  });
  adjacency_.assign(n, {});
  for (const auto& spec : edges) {
    if (spec.u < 0 || spec.v < 0 || spec.u >= n || spec.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (spec.u == spec.v) throw std::invalid_argument("self-loop");
    NodePair key = make_node_pair(spec.u, spec.v);
    EdgeId id = num_edges();
    if (!edge_index_.emplace(key, id).second) {
      throw std::invalid_argument("parallel edge");
    }
    edges_.push_back({key.first, key.second});
    costs_.push_back(spec.cost);
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    adjacency_[edges_[e].u].push_back({edges_[e].v, e});
    adjacency_[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.node < b.node; });
  }
}

std::optional<EdgeId> Network::find_edge(NodeId a, NodeId b) const {
  auto it = edge_index_.find(make_node_pair(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> Network::find_node(const std::string& label) const {
  auto it = node_index_.find(label);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

bool Network::is_connected() const {
  if (num_nodes() == 0) return false;
  std::vector<bool> seen(num_nodes(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[v]) {
      if (!seen[inc.node]) {
        seen[inc.node] = true;
        ++reached;
        stack.push_back(inc.node);
      }
    }
  }
  return reached == num_nodes();
}

Instance::Instance(Network network, std::vector<std::int64_t> bounds)
    : network_(std::move(network)), bounds_(std::move(bounds)) {
  if (static_cast<int>(bounds_.size()) != network_.num_nodes()) {
    throw std::invalid_argument("bounds size does not match node count");
  }
  terminal_index_.assign(bounds_.size(), -1);
  for (NodeId v = 0; v < network_.num_nodes(); ++v) {
    if (bounds_[v] > 0) {
      terminal_index_[v] = static_cast<int>(terminals_.size());
      terminals_.push_back(v);
    }
  }
}

std::int64_t Instance::total_bound() const {
  return std::accumulate(bounds_.begin(), bounds_.end(), std::int64_t{0});
}

bool Instance::has_unit_bounds() const {
  return std::all_of(terminals_.begin(), terminals_.end(),
                     [&](NodeId t) { return bounds_[t] == 1; });
}

Instance validate_instance(const RawInstance& raw) {
  std::vector<Violation> violations;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  for (const auto& label : raw.nodes) {
    if (!ids.emplace(label, static_cast<NodeId>(labels.size())).second) {
      violations.push_back({ErrorCode::kDuplicateNode, "node '" + label + "' listed twice"});
      continue;
    }
    labels.push_back(label);
  }

  std::vector<EdgeSpec> edges;
  std::set<NodePair> seen_pairs;
  for (const auto& e : raw.edges) {
    auto u = ids.find(e.u);
    auto v = ids.find(e.v);
    std::string name = "edge {" + e.u + "," + e.v + "}";
    if (u == ids.end() || v == ids.end()) {
      violations.push_back({ErrorCode::kUnknownNode, name + " references an unknown node"});
      continue;
    }
    if (u->second == v->second) {
      violations.push_back({ErrorCode::kSelfLoop, name + " is a self-loop"});
      continue;
    }
    if (!seen_pairs.insert(make_node_pair(u->second, v->second)).second) {
      violations.push_back({ErrorCode::kParallelEdge, name + " duplicates an existing edge"});
      continue;
    }
    if (e.cost.sign() < 0) {
      violations.push_back({ErrorCode::kNegativeCost, name + " has negative cost " + e.cost.to_string()});
    }
    edges.push_back({u->second, v->second, e.cost});
  }

  std::vector<std::int64_t> bounds(labels.size(), 0);
  int terminal_count = 0;
  for (const auto& t : raw.terminals) {
    auto it = ids.find(t.node);
    if (it == ids.end()) {
      violations.push_back({ErrorCode::kUnknownNode, "terminal '" + t.node + "' is not a node"});
      continue;
    }
    if (t.bound <= 0) {
      violations.push_back({ErrorCode::kNonPositiveBound,
                            "terminal '" + t.node + "' has bound " + std::to_string(t.bound)});
      continue;
    }
    if (bounds[it->second] > 0) {
      violations.push_back({ErrorCode::kDuplicateTerminal, "terminal '" + t.node + "' listed twice"});
      continue;
    }
    bounds[it->second] = t.bound;
    ++terminal_count;
  }
  if (terminal_count < 2) {
    violations.push_back({ErrorCode::kTooFewTerminals,
                          "need at least 2 terminals, got " + std::to_string(terminal_count)});
  }

  Network network(labels, edges);
  if (!network.is_connected()) {
    violations.push_back({ErrorCode::kDisconnectedGraph, "graph is not connected"});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Instance(std::move(network), std::move(bounds));
}

RawInstance to_raw(const Instance& instance) {
  const Network& net = instance.network();
  RawInstance raw;
  raw.nodes = net.labels();
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    raw.edges.push_back({net.label(net.edge(e).u), net.label(net.edge(e).v), net.cost(e)});
  }
  for (NodeId t : instance.terminals()) {
    raw.terminals.push_back({net.label(t), instance.bound(t)});
  }
  return raw;
}

void DemandSet::set(NodeId i, NodeId j, const Rational& value) {
  if (i == j) throw std::invalid_argument("demand between a terminal and itself");
  if (value.sign() < 0) throw std::invalid_argument("negative demand");
  values_[make_node_pair(i, j)] = value;
}

Rational DemandSet::at(NodeId i, NodeId j) const {
  auto it = values_.find(make_node_pair(i, j));
  return it == values_.end() ? Rational{} : it->second;
}

Rational DemandSet::row_sum(NodeId i) const {
  Rational sum;
  for (const auto& [pair, value] : values_) {
    if (pair.first == i || pair.second == i) sum += value;
  }
  return sum;
}

DemandSet DemandSet::scaled(const Rational& factor) const {
  DemandSet out;
  for (const auto& [pair, value] : values_) out.set(pair.first, pair.second, value * factor);
  return out;
}

bool is_valid_demand_set(const Instance& instance, const DemandSet& demands) {
  std::vector<Rational> rows(instance.network().num_nodes());
  const int n = instance.network().num_nodes();
  for (const auto& [pair, value] : demands.entries()) {
    for (NodeId x : {pair.first, pair.second}) {
      if (x < 0 || x >= n || !instance.is_terminal(x)) {
        throw Error(ErrorCode::kUnknownTerminal,
                    "demand references non-terminal node " + std::to_string(x));
      }
      rows[x] += value;
    }
  }
  for (NodeId t : instance.terminals()) {
    if (rows[t] > Rational(instance.bound(t))) return false;
  }
  return true;
}

Path reversed(const Path& path) {
  Path out = path;
  std::reverse(out.nodes.begin(), out.nodes.end());
  return out;
}

std::vector<EdgeId> path_edges(const Network& network, const Path& path) {
  std::vector<EdgeId> out;
  if (path.nodes.empty()) throw Error(ErrorCode::kInvalidPath, "empty path");
  out.reserve(path.nodes.size() - 1);
  for (std::size_t s = 0; s + 1 < path.nodes.size(); ++s) {
    NodeId a = path.nodes[s];
    NodeId b = path.nodes[s + 1];
    if (a < 0 || b < 0 || a >= network.num_nodes() || b >= network.num_nodes()) {
      throw Error(ErrorCode::kInvalidPath, "path references unknown node");
    }
    auto e = network.find_edge(a, b);
    if (!e) {
      throw Error(ErrorCode::kInvalidPath,
                  "no edge between " + network.label(a) + " and " + network.label(b));
    }
    out.push_back(*e);
  }
  return out;
}

void check_path(const Network& network, const Path& path, NodeId from, NodeId to) {
  if (path.nodes.empty() || path.front() != from || path.back() != to) {
    throw Error(ErrorCode::kPathEndpointMismatch,
                "path does not run from " + network.label(from) + " to " + network.label(to));
  }
  std::vector<EdgeId> edges = path_edges(network, path);
  if (path.trail) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw Error(ErrorCode::kNonSimplePath, "trail repeats an edge");
    }
  } else {
    std::vector<NodeId> nodes = path.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      throw Error(ErrorCode::kNonSimplePath, "path repeats a node");
    }
  }
}

namespace {

struct PathEnumerator {
  const Network& network;
  NodeId target;
  bool trails;
  std::uint64_t limit;
  std::vector<NodeId> stack;
  std::vector<bool> node_used;
  std::vector<bool> edge_used;
  std::vector<Path> out;

  void emit() {
    if (out.size() >= limit) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(limit) + " paths between a terminal pair");
    }
    out.push_back({stack, trails});
  }

  void visit(NodeId v) {
    if (v == target) {
      emit();
      if (!trails) return;
    }
    for (const auto& inc : network.neighbors(v)) {
      if (trails ? edge_used[inc.edge] : node_used[inc.node]) continue;
      node_used[inc.node] = true;
      edge_used[inc.edge] = true;
      stack.push_back(inc.node);
      visit(inc.node);
      stack.pop_back();
      edge_used[inc.edge] = false;
      node_used[inc.node] = false;
    }
  }
};

}  // namespace

std::vector<Path> enumerate_paths(const Network& network, NodeId from, NodeId to,
                                  bool trails, std::uint64_t limit) {
  PathEnumerator en{network, to, trails, limit, {from},
                    std::vector<bool>(network.num_nodes(), false),
                    std::vector<bool>(network.num_edges(), false), {}};
  en.node_used[from] = true;
  en.visit(from);
  return std::move(en.out);
}

Rational VpnSolution::cost(const Network& network) const {
  Rational total;
  for (EdgeId e = 0; e < network.num_edges(); ++e) {
    if (e < static_cast<EdgeId>(capacities.size())) total += network.cost(e) * capacities[e];
  }
  return total;
}

bool is_ring(const Network& network) {
  const int n = network.num_nodes();
  if (n < 3 || network.num_edges() != n) return false;
  for (NodeId v = 0; v < n; ++v) {
    if (network.degree(v) != 2) return false;
  }
  return network.is_connected();
}

ScaledCosts::ScaledCosts(const Network& network) {
  __int128 scale = 1;
  for (const auto& c : network.costs()) {
    __int128 g = std::gcd(static_cast<std::int64_t>(scale), c.den());
    scale = scale / g * c.den();
    if (scale > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("cost denominators too large to scale");
    }
  }
  scale_ = static_cast<std::int64_t>(scale);
  for (const auto& c : network.costs()) {
    __int128 v = static_cast<__int128>(c.num()) * (scale_ / c.den());
    if (v > std::numeric_limits<std::int64_t>::max() / 1024) {
      throw std::overflow_error("scaled cost too large");
    }
    scaled_.push_back(static_cast<std::int64_t>(v));
  }
}

Rational ScaledCosts::unscale(__int128 total) const {
  if (total > std::numeric_limits<std::int64_t>::max() ||
      total < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("scaled total out of range");
  }
  return Rational(static_cast<std::int64_t>(total), scale_);
}

}  // namespace svpnd
