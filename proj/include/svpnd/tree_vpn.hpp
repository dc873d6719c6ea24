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

// Tree solutions of the symmetric VPN design problem: capacity reservation
// for a fixed tree, exact costing, and optimal-tree search.

#ifndef SVPND_TREE_VPN_HPP_
#define SVPND_TREE_VPN_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "svpnd/model.hpp"

namespace svpnd {

enum class Certification { kHeuristic, kExhaustive };

std::string_view to_string(Certification c);

struct TreeSolution {
  std::vector<EdgeId> tree_edges;        // sorted, after pruning
  std::vector<std::int64_t> capacities;  // indexed by EdgeId, 0 off the tree
  Certification certified = Certification::kHeuristic;

  friend bool operator==(const TreeSolution&, const TreeSolution&) = default;
};

// Prunes non-terminal leaves, then sets u(e) = min(B_side, B_total - B_side)
// on every remaining edge, where B_side sums the bounds on one side of e.
// Throws kNotATree (cycle, forest, bad edge id) or kTerminalNotSpanned.
TreeSolution tree_capacities(const Instance& instance,
                             std::span<const EdgeId> tree_edges);

Rational tree_cost(const Instance& instance, const TreeSolution& tree);

// Dijkstra tree rooted at `root`, restricted to root-terminal paths and
// pruned. Ties prefer fewer hops, then the smallest predecessor id.
TreeSolution shortest_path_tree(const Instance& instance, NodeId root);

// Cheapest shortest_path_tree over all roots; ties go to the
// lexicographically smallest edge set.
TreeSolution optimal_tree_search(const Instance& instance);

// Enumerates spanning trees of the network (pruned to the terminals) and
// returns a minimum-cost one. Throws kBudgetExceeded after `budget` trees.
TreeSolution exhaustive_tree_search(const Instance& instance,
                                    std::uint64_t budget = kDefaultBudget);

// Paths from `source` to every node reached by the tree edges.
std::map<NodeId, Path> tree_paths_from(const Network& network,
                                       std::span<const EdgeId> tree_edges,
                                       NodeId source);

// All-pair terminal paths through the tree plus its capacities.
VpnSolution to_vpn_solution(const Instance& instance, const TreeSolution& tree);

}  // namespace svpnd

#endif  // SVPND_TREE_VPN_HPP_
