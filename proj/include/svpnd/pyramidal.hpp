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

// Pyramidal Routing: one unit-bound source routes a path to every other
// terminal and pays c(e) * y(e) per edge, where n(e) counts the paths using
// e and y(e) = min(n(e), k - n(e)).

#ifndef SVPND_PYRAMIDAL_HPP_
#define SVPND_PYRAMIDAL_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "svpnd/model.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {

struct PrInstance {
  Instance instance;
  NodeId source = 0;
};

// Throws kNonUnitBounds unless b == 1 everywhere, kUnknownTerminal if the
// source is not a terminal.
PrInstance make_pr_instance(Instance instance, NodeId source);

struct PrPathSystem {
  NodeId source = 0;
  std::map<NodeId, Path> paths;  // terminal -> path from source

  friend bool operator==(const PrPathSystem&, const PrPathSystem&) = default;
};

// Per-edge path counts n(e) and pyramid heights y(e).
struct PrProfile {
  std::vector<int> n;
  std::vector<int> y;
};

// Validates the system (kPathEndpointMismatch, kNonSimplePath) and
// returns its profile.
PrProfile pr_profile(const PrInstance& pr, const PrPathSystem& system);

Rational pr_cost(const PrInstance& pr, const PrPathSystem& system);

// True iff the union of the system's edges is acyclic.
bool is_tree_system(const Network& network, const PrPathSystem& system);

// Globally optimal system by enumerating every combination of per-terminal
// simple paths (trails when allow_trails). The first optimum in
// lexicographic order wins. Throws kBudgetExceeded.
PrPathSystem pr_bruteforce(const PrInstance& pr, bool allow_trails = false,
                           std::uint64_t budget = kDefaultBudget);

struct RingContraction {
  Instance contracted;                // every node a terminal
  std::vector<NodeId> original_node;  // contracted id -> original id
  // Contracted edge (smaller id first) -> original node sequence, oriented
  // from the smaller to the larger contracted endpoint.
  std::map<NodePair, std::vector<NodeId>> arcs;
};

// Replaces every maximal run of non-terminals by one edge carrying the run's
// total cost. Throws kNotARing, kAllNodesNonterminal, or kDegenerateRing when
// only two terminals remain (the result would need parallel edges).
RingContraction contract_nonterminals_on_ring(const Instance& instance);

// Optimal PR system on a ring: evaluates the k trees obtained by deleting one
// terminal-to-terminal arc and re-expands the cheapest. Equal-cost deletions
// go to the lexicographically smallest arc endpoint pair. Throws kNotARing.
PrPathSystem ring_pr_optimal(const PrInstance& pr);

PrPathSystem tree_to_pr(const Instance& instance, const TreeSolution& tree,
                        NodeId source);

// Throws kNotATreeSystem when the union of the paths contains a cycle.
TreeSolution pr_tree_to_tree(const PrInstance& pr, const PrPathSystem& system);

}  // namespace svpnd

#endif  // SVPND_PYRAMIDAL_HPP_
