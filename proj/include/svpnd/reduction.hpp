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

// Reduction from general hose bounds to unit bounds. A terminal with bound
// b >= 2 becomes b unit-bound sub-terminals, either hung off the node by
// zero-cost pendant edges (star) or placed on a zero-cost chain obtained by
// subdividing one incident edge (subdivision, which keeps rings rings).

#ifndef SVPND_REDUCTION_HPP_
#define SVPND_REDUCTION_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "svpnd/model.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {

enum class ReductionVariant { kStar, kSubdivision };
enum class EdgeChoicePolicy { kSmallestEdge, kCheapestEdge };

std::string_view to_string(ReductionVariant v);

struct SplitChain {
  NodeId terminal;                    // original terminal, same id after reduction
  std::vector<NodeId> sub_terminals;  // i_1..i_b; chain order for subdivision
};

struct ReductionMap {
  ReductionVariant variant = ReductionVariant::kStar;
  Instance original;
  Instance reduced;  // original nodes keep their ids; new nodes follow
  std::vector<SplitChain> chains;
  // Reduced edge -> original edge; nullopt for zero-cost auxiliary edges.
  std::vector<std::optional<EdgeId>> edge_provenance;
};

ReductionMap split_terminals_star(const Instance& instance);

// Throws kIsolatedTerminal if a terminal to split has no incident edge.
ReductionMap split_terminals_subdivide(
    const Instance& instance,
    EdgeChoicePolicy policy = EdgeChoicePolicy::kSmallestEdge);

// True when the tree keeps every chain of sub-terminals connected through
// its zero-cost edges and attached to its home node, so it can be lifted.
bool is_liftable(const ReductionMap& map, const TreeSolution& reduced_tree);

// Returns a liftable tree solution on the reduced instance whose cost does
// not exceed the input's. Liftable inputs are returned unchanged.
TreeSolution normalize_reduced_tree(const ReductionMap& map,
                                    const TreeSolution& reduced_tree);

// Maps a liftable reduced tree back to the original instance at equal cost.
// Throws kChainBroken when the tree is not liftable.
TreeSolution lift_tree_solution(const ReductionMap& map,
                                const TreeSolution& reduced_tree);

}  // namespace svpnd

#endif  // SVPND_REDUCTION_HPP_
