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

#include "svpnd/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "svpnd/error.hpp"

namespace svpnd {
namespace {

struct BuildEdge {
  NodeId u;
  NodeId v;
  Rational cost;
  std::optional<EdgeId> origin;
  bool alive = true;
};

class ReducedBuilder {
 public:
  explicit ReducedBuilder(const Instance& instance)
      : labels_(instance.network().labels()),
        bounds_(instance.bounds()),
        taken_(labels_.begin(), labels_.end()) {
    const Network& net = instance.network();
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
      edges_.push_back({net.edge(e).u, net.edge(e).v, net.cost(e), e});
    }
  }

  NodeId add_node(const std::string& base, int index) {
    std::string label = base + "#" + std::to_string(index);
    while (!taken_.insert(label).second) label += "'";
    labels_.push_back(label);
    bounds_.push_back(1);
    return static_cast<NodeId>(labels_.size() - 1);
  }

  void add_edge(NodeId u, NodeId v, Rational cost, std::optional<EdgeId> origin) {
    edges_.push_back({u, v, cost, origin});
  }

  std::vector<BuildEdge>& edges() { return edges_; }
  std::vector<std::int64_t>& bounds() { return bounds_; }

  std::pair<Instance, std::vector<std::optional<EdgeId>>> finish() {
    std::vector<EdgeSpec> specs;
    for (const auto& e : edges_) {
      if (e.alive) specs.push_back({e.u, e.v, e.cost});
    }
    Network network(labels_, specs);
    std::vector<std::optional<EdgeId>> provenance(network.num_edges());
    for (const auto& e : edges_) {
      if (e.alive) provenance[*network.find_edge(e.u, e.v)] = e.origin;
    }
    return {Instance(std::move(network), bounds_), std::move(provenance)};
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::int64_t> bounds_;
  std::set<std::string> taken_;
  std::vector<BuildEdge> edges_;
};

std::vector<bool> tree_nodes(const Network& net, const TreeSolution& tree) {
  std::vector<bool> in(net.num_nodes(), false);
  for (EdgeId e : tree.tree_edges) in[net.edge(e).u] = in[net.edge(e).v] = true;
  return in;
}

// First auxiliary edge that a liftable tree must contain but this one lacks.
std::optional<EdgeId> missing_required_edge(const ReductionMap& map, const TreeSolution& tree) {
  const Network& net = map.reduced.network();
  const int original_nodes = map.original.network().num_nodes();
  std::vector<bool> in_tree = tree_nodes(net, tree);
  std::vector<bool> edge_in(net.num_edges(), false);
  for (EdgeId e : tree.tree_edges) edge_in[e] = true;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (map.edge_provenance[e] || edge_in[e]) continue;
    const Edge& edge = net.edge(e);
    bool link = edge.u < original_nodes;  // joins a home node to its chain
    if (link && !in_tree[edge.u]) continue;
    return e;
  }
  return std::nullopt;
}

Rational cost_of(const Instance& instance, const TreeSolution& tree) {
  return tree_cost(instance, tree);
}

// Tree from the cheapest-route argument: rooted at a weighted centroid of
// the input, its shortest-path tree in the original network costs at most
// the input, and it expands to a reduced tree holding every chain edge.
TreeSolution centroid_rebuild(const ReductionMap& map, const TreeSolution& tree) {
  const Instance& reduced = map.reduced;
  const Network& net = reduced.network();
  std::vector<bool> in_tree = tree_nodes(net, tree);
  auto paths = tree_paths_from(net, tree.tree_edges, reduced.terminals().front());
  const std::int64_t total = reduced.total_bound();
  // Subtree sums with respect to the root used by tree_paths_from.
  std::vector<NodeId> parent(net.num_nodes(), -1);
  std::vector<std::pair<std::size_t, NodeId>> by_depth;
  for (const auto& [v, path] : paths) {
    if (path.nodes.size() > 1) parent[v] = path.nodes[path.nodes.size() - 2];
    by_depth.emplace_back(path.nodes.size(), v);
  }
  std::sort(by_depth.rbegin(), by_depth.rend());
  std::vector<std::int64_t> below(net.num_nodes(), 0);
  std::vector<std::int64_t> heaviest_child(net.num_nodes(), 0);
  for (auto [depth, v] : by_depth) {
    below[v] += reduced.bound(v);
    if (parent[v] >= 0) {
      below[parent[v]] += below[v];
      heaviest_child[parent[v]] = std::max(heaviest_child[parent[v]], below[v]);
    }
  }
  NodeId centroid = -1;
  for (NodeId v = 0; v < net.num_nodes() && centroid < 0; ++v) {
    if (in_tree[v] && 2 * std::max(heaviest_child[v], total - below[v]) <= total) centroid = v;
  }
  if (centroid < 0) throw std::logic_error("tree without a weighted centroid");

  NodeId home = centroid;
  for (const auto& chain : map.chains) {
    if (std::find(chain.sub_terminals.begin(), chain.sub_terminals.end(), centroid) !=
        chain.sub_terminals.end()) {
      home = chain.terminal;
    }
  }
  TreeSolution quotient = shortest_path_tree(map.original, home);
  std::vector<bool> keep(map.original.network().num_edges(), false);
  for (EdgeId e : quotient.tree_edges) keep[e] = true;
  std::vector<EdgeId> expanded;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    const auto& origin = map.edge_provenance[e];
    if (!origin || keep[*origin]) expanded.push_back(e);
  }
  TreeSolution out = tree_capacities(reduced, expanded);
  if (cost_of(reduced, out) > cost_of(reduced, tree)) {
    throw std::logic_error("centroid rebuild increased the tree cost");
  }
  return out;
}

}  // namespace

std::string_view to_string(ReductionVariant v) {
  return v == ReductionVariant::kStar ? "star" : "subdivision";
}

ReductionMap split_terminals_star(const Instance& instance) {
  ReducedBuilder builder(instance);
  ReductionMap map;
  map.variant = ReductionVariant::kStar;
  map.original = instance;
  const Network& net = instance.network();
  for (NodeId t : instance.terminals()) {
    std::int64_t b = instance.bound(t);
    if (b < 2) continue;
    SplitChain chain{t, {}};
    builder.bounds()[t] = 0;
    for (int s = 1; s <= b; ++s) {
      NodeId sub = builder.add_node(net.label(t), s);
      builder.add_edge(t, sub, Rational{}, std::nullopt);
      chain.sub_terminals.push_back(sub);
    }
    map.chains.push_back(std::move(chain));
  }
  std::tie(map.reduced, map.edge_provenance) = builder.finish();
  return map;
}

ReductionMap split_terminals_subdivide(const Instance& instance, EdgeChoicePolicy policy) {
  ReducedBuilder builder(instance);
  ReductionMap map;
  map.variant = ReductionVariant::kSubdivision;
  map.original = instance;
  const Network& net = instance.network();
  for (NodeId t : instance.terminals()) {
    std::int64_t b = instance.bound(t);
    if (b < 2) continue;
    auto& edges = builder.edges();
    std::optional<std::size_t> chosen;
    for (std::size_t s = 0; s < edges.size(); ++s) {
      const BuildEdge& e = edges[s];
      if (!e.alive || (e.u != t && e.v != t)) continue;
      if (!chosen) {
        chosen = s;
        continue;
      }
      const BuildEdge& c = edges[*chosen];
      auto key = [](const BuildEdge& x) { return make_node_pair(x.u, x.v); };
      bool better = policy == EdgeChoicePolicy::kCheapestEdge
                        ? (e.cost < c.cost || (e.cost == c.cost && key(e) < key(c)))
                        : key(e) < key(c);
      if (better) chosen = s;
    }
    if (!chosen) {
      throw Error(ErrorCode::kIsolatedTerminal, "terminal " + net.label(t) + " has no incident edge");
    }
    BuildEdge split = edges[*chosen];
    edges[*chosen].alive = false;
    NodeId far = split.u == t ? split.v : split.u;
    SplitChain chain{t, {}};
    builder.bounds()[t] = 0;
    NodeId prev = t;
    for (int s = 1; s <= b; ++s) {
      NodeId sub = builder.add_node(net.label(t), s);
      builder.add_edge(prev, sub, Rational{}, std::nullopt);
      chain.sub_terminals.push_back(sub);
      prev = sub;
    }
    builder.add_edge(prev, far, split.cost, split.origin);
    map.chains.push_back(std::move(chain));
  }
  std::tie(map.reduced, map.edge_provenance) = builder.finish();
  return map;
}

bool is_liftable(const ReductionMap& map, const TreeSolution& reduced_tree) {
  return !missing_required_edge(map, reduced_tree);
}

TreeSolution normalize_reduced_tree(const ReductionMap& map, const TreeSolution& reduced_tree) {
  if (is_liftable(map, reduced_tree)) return reduced_tree;
  const Instance& reduced = map.reduced;
  const Network& net = reduced.network();
  const Rational input_cost = cost_of(reduced, reduced_tree);

  // Swap each missing chain edge in, evicting the cycle edge that leaves the
  // cheapest tree.
  TreeSolution current = reduced_tree;
  for (int guard = 0; guard <= net.num_edges(); ++guard) {
    auto missing = missing_required_edge(map, current);
    if (!missing) break;
    const Edge& f = net.edge(*missing);
    auto paths = tree_paths_from(net, current.tree_edges, f.u);
    auto it = paths.find(f.v);
    if (it == paths.end()) break;
    std::optional<TreeSolution> best;
    Rational best_cost;
    for (EdgeId g : path_edges(net, it->second)) {
      if (!map.edge_provenance[g]) continue;
      std::vector<EdgeId> edges;
      for (EdgeId e : current.tree_edges) {
        if (e != g) edges.push_back(e);
      }
      edges.push_back(*missing);
      TreeSolution candidate = tree_capacities(reduced, edges);
      Rational cost = cost_of(reduced, candidate);
      if (!best || cost < best_cost) {
        best = std::move(candidate);
        best_cost = cost;
      }
    }
    if (!best) break;
    current = std::move(*best);
  }
  if (is_liftable(map, current) && cost_of(reduced, current) <= input_cost) {
    current.certified = reduced_tree.certified;
    return current;
  }
  TreeSolution rebuilt = centroid_rebuild(map, reduced_tree);
  rebuilt.certified = reduced_tree.certified;
  return rebuilt;
}

TreeSolution lift_tree_solution(const ReductionMap& map, const TreeSolution& reduced_tree) {
  if (!is_liftable(map, reduced_tree)) {
    throw Error(ErrorCode::kChainBroken,
                "sub-terminal chain is not contained in the tree; normalize it first");
  }
  std::vector<EdgeId> edges;
  for (EdgeId e : reduced_tree.tree_edges) {
    if (const auto& origin = map.edge_provenance[e]) edges.push_back(*origin);
  }
  TreeSolution out = tree_capacities(map.original, edges);
  out.certified = reduced_tree.certified;
  if (tree_cost(map.original, out) != tree_cost(map.reduced, reduced_tree)) {
    throw std::logic_error("lifted tree cost differs from the reduced tree cost");
  }
  return out;
}

}  // namespace svpnd
