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

// Lower-bound certificates for unit-bound VPN solutions. For a probe edge e
// the demand witness D^e loads e with exactly the average pyramid height
// (1/k) sum_i y(e, P_i), where P_i collects the solution's paths at terminal
// i. Summing over edges shows that some terminal's Pyramidal Routing cost
// never exceeds the solution cost.

#ifndef SVPND_CERTIFICATES_HPP_
#define SVPND_CERTIFICATES_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "svpnd/model.hpp"

namespace svpnd {

// n(e, P_i) for every terminal (outer index = terminal_index) and edge.
std::vector<std::vector<int>> rooted_path_counts(
    const Instance& instance, const std::map<NodePair, Path>& paths);

// d_ij = (1/k)(y_i/n_i + y_j/n_j) on pairs routed over the probe edge, where
// y_i, n_i are taken at e for P_i. Requires unit bounds (kNonUnitBounds).
DemandSet demand_witness(const Instance& instance,
                         const std::map<NodePair, Path>& paths,
                         EdgeId probe);

// Every row of the witness sums to at most 1. A false result means a bug.
bool verify_claim1(const Instance& instance, const DemandSet& witness);

struct Claim2Result {
  Rational capacity;        // u(e)
  Rational average_height;  // (1/k) sum_i y(e, P_i)
  Rational witness_load;    // load the witness D^e puts on e
  bool holds = false;       // capacity >= average_height
};

// Throws kInfeasibleInput unless the solution passes check_feasible.
Claim2Result verify_claim2(const Instance& instance,
                           const VpnSolution& solution, EdgeId probe);

struct LowerBoundCertificate {
  Rational solution_cost;
  std::map<NodeId, Rational> per_terminal_pr_costs;
  std::map<EdgeId, DemandSet> witness_demands;
  Rational bound;  // min of per_terminal_pr_costs
  NodeId argmin_terminal = -1;
};

// Throws kInfeasibleInput for infeasible solutions, kNonUnitBounds.
LowerBoundCertificate pr_lower_bound(const Instance& instance,
                                     const VpnSolution& solution);

struct ChainReport {
  Rational svpnd_optimum;  // brute force over all routings
  Rational pr_minimum;     // min over sources of the PR optimum
  std::map<NodeId, Rational> pr_optimum_by_source;
  Rational tree_optimum;       // exhaustive tree search
  Rational heuristic_tree;     // optimal_tree_search
  bool chain_holds = false;    // pr_minimum <= svpnd <= tree
  bool tree_search_agrees = false;
  bool conjecture1 = false;    // svpnd == tree
  bool conjecture2 = false;    // every source attains its PR optimum by a tree
};

// Brute-force check of min_i PR(i) <= sVPND <= tree on a unit-bound
// instance. Throws kBudgetExceeded, kNonUnitBounds.
ChainReport verify_equivalence_chain(const Instance& instance,
                                     std::uint64_t budget = kDefaultBudget);

// Same, reusing an already computed brute-force optimum.
ChainReport verify_equivalence_chain(const Instance& instance,
                                     const VpnSolution& svpnd_optimum,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace svpnd

#endif  // SVPND_CERTIFICATES_HPP_
