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

// Worst-case edge loads under the hose model. For a network edge e, the
// adversary maximises the total demand of the pairs routed over e subject to
// the terminal budgets: a fractional b-matching on the demand graph of e.
// Its optimum is half the maximum b-matching of the bipartite double cover,
// computed here with an integral max-flow.

#ifndef SVPND_FEASIBILITY_HPP_
#define SVPND_FEASIBILITY_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "svpnd/model.hpp"

namespace svpnd {

struct DemandGraph {
  std::vector<NodeId> vertices;       // terminal node ids
  std::vector<std::int64_t> budgets;  // parallel to vertices
  // Index pairs into vertices, first < second, sorted and unique.
  std::vector<std::pair<int, int>> demand_edges;
};

// Demand graph over all terminals of the instance with the given pairs.
DemandGraph make_demand_graph(const Instance& instance,
                              std::span<const NodePair> pairs);

// Twice the worst-case load; always an integer.
std::int64_t doubled_worst_case_load(const DemandGraph& graph);

// Exact worst-case load; denominator 1 or 2.
Rational worst_case_load(const DemandGraph& graph);

// Half-integral valid demand set attaining worst_case_load.
DemandSet extract_witness(const DemandGraph& graph);

struct EdgeViolation {
  EdgeId edge;
  Rational load;
  Rational capacity;
  DemandSet witness;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Rational> loads;  // worst-case load per edge
  std::vector<EdgeViolation> violations;
};

// Pairs of terminals whose path uses each edge. Throws kMissingPairPath and
// the path errors of check_path.
std::vector<std::vector<NodePair>> pairs_per_edge(
    const Instance& instance, const std::map<NodePair, Path>& paths);

// Minimal feasible capacities for a routing: the worst-case load per edge.
std::vector<Rational> worst_case_loads(const Instance& instance,
                                       const std::map<NodePair, Path>& paths);

FeasibilityReport check_feasible(const Instance& instance,
                                 const VpnSolution& solution);

}  // namespace svpnd

#endif  // SVPND_FEASIBILITY_HPP_
