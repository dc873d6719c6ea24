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

#include "svpnd/certificates.hpp"

#include <stdexcept>

#include "svpnd/error.hpp"
#include "svpnd/feasibility.hpp"
#include "svpnd/lab.hpp"
#include "svpnd/pyramidal.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {
namespace {

void require_unit_bounds(const Instance& instance) {
  if (!instance.has_unit_bounds()) {
    throw Error(ErrorCode::kNonUnitBounds, "certificates need unit bounds; reduce the instance first");
  }
}

int height(int n, int k) { return std::min(n, k - n); }

struct Counts {
  std::vector<std::vector<NodePair>> pairs;  // per edge
  std::vector<std::vector<int>> n;           // [terminal index][edge]
};

Counts count_paths(const Instance& instance, const std::map<NodePair, Path>& paths) {
  Counts out;
  out.pairs = pairs_per_edge(instance, paths);
  const int edges = instance.network().num_edges();
  out.n.assign(instance.num_terminals(), std::vector<int>(edges, 0));
  for (EdgeId e = 0; e < edges; ++e) {
    for (const auto& [a, b] : out.pairs[e]) {
      ++out.n[instance.terminal_index(a)][e];
      ++out.n[instance.terminal_index(b)][e];
    }
  }
  return out;
}

DemandSet witness_from_counts(const Instance& instance, const Counts& counts, EdgeId probe) {
  const int k = instance.num_terminals();
  DemandSet out;
  for (const auto& [a, b] : counts.pairs[probe]) {
    int na = counts.n[instance.terminal_index(a)][probe];
    int nb = counts.n[instance.terminal_index(b)][probe];
    if (na < 1 || nb < 1) throw std::logic_error("routed pair with zero path count");
    Rational value = (Rational(height(na, k), na) + Rational(height(nb, k), nb)) / Rational(k);
    out.set(a, b, value);
  }
  return out;
}

Rational average_height(const Instance& instance, const Counts& counts, EdgeId probe) {
  const int k = instance.num_terminals();
  std::int64_t sum = 0;
  for (int i = 0; i < k; ++i) sum += height(counts.n[i][probe], k);
  return Rational(sum, k);
}

void require_feasible(const Instance& instance, const VpnSolution& solution) {
  if (!check_feasible(instance, solution).feasible) {
    throw Error(ErrorCode::kInfeasibleInput, "solution does not support every valid demand set");
  }
}

}  // namespace

std::vector<std::vector<int>> rooted_path_counts(const Instance& instance,
                                                 const std::map<NodePair, Path>& paths) {
  return count_paths(instance, paths).n;
}

DemandSet demand_witness(const Instance& instance, const std::map<NodePair, Path>& paths,
                         EdgeId probe) {
  require_unit_bounds(instance);
  return witness_from_counts(instance, count_paths(instance, paths), probe);
}

bool verify_claim1(const Instance& instance, const DemandSet& witness) {
  std::vector<Rational> rows(instance.network().num_nodes());
  for (const auto& [pair, value] : witness.entries()) {
    rows[pair.first] += value;
    rows[pair.second] += value;
  }
  for (const auto& row : rows) {
    if (row > Rational(1)) return false;
  }
  return true;
}

Claim2Result verify_claim2(const Instance& instance, const VpnSolution& solution, EdgeId probe) {
  require_unit_bounds(instance);
  require_feasible(instance, solution);
  Counts counts = count_paths(instance, solution.paths);
  Claim2Result out;
  out.capacity = probe < static_cast<EdgeId>(solution.capacities.size()) ? solution.capacities[probe]
                                                                          : Rational{};
  out.average_height = average_height(instance, counts, probe);
  DemandSet witness = witness_from_counts(instance, counts, probe);
  for (const auto& [pair, value] : witness.entries()) out.witness_load += value;
  out.holds = out.capacity >= out.average_height;
  return out;
}

LowerBoundCertificate pr_lower_bound(const Instance& instance, const VpnSolution& solution) {
  require_unit_bounds(instance);
  require_feasible(instance, solution);
  const Network& net = instance.network();
  const int k = instance.num_terminals();
  Counts counts = count_paths(instance, solution.paths);
  LowerBoundCertificate cert;
  cert.solution_cost = solution.cost(net);
  for (int i = 0; i < k; ++i) {
    Rational cost;
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
      if (int y = height(counts.n[i][e], k); y > 0) cost += net.cost(e) * Rational(y);
    }
    NodeId t = instance.terminals()[i];
    cert.per_terminal_pr_costs.emplace(t, cost);
    if (cert.argmin_terminal < 0 || cost < cert.bound) {
      cert.bound = cost;
      cert.argmin_terminal = t;
    }
  }
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    cert.witness_demands.emplace(e, witness_from_counts(instance, counts, e));
  }
  if (cert.bound > cert.solution_cost) {
    throw std::logic_error("pyramidal lower bound exceeds the cost of a feasible solution");
  }
  return cert;
}

ChainReport verify_equivalence_chain(const Instance& instance, std::uint64_t budget) {
  require_unit_bounds(instance);
  return verify_equivalence_chain(instance, bruteforce_svpnd(instance, budget), budget);
}

ChainReport verify_equivalence_chain(const Instance& instance, const VpnSolution& best,
                                     std::uint64_t budget) {
  require_unit_bounds(instance);
  ChainReport report;
  report.svpnd_optimum = best.cost(instance.network());
  report.tree_optimum = tree_cost(instance, exhaustive_tree_search(instance, budget));
  report.heuristic_tree = tree_cost(instance, optimal_tree_search(instance));
  report.conjecture2 = true;
  bool first = true;
  for (NodeId source : instance.terminals()) {
    PrInstance pr = make_pr_instance(instance, source);
    Rational optimum = pr_cost(pr, pr_bruteforce(pr, false, budget));
    report.pr_optimum_by_source.emplace(source, optimum);
    if (first || optimum < report.pr_minimum) report.pr_minimum = optimum;
    first = false;
    // Tree PR solutions cost exactly their sVPND tree cost, so the best tree
    // for any source costs tree_optimum.
    if (optimum != report.tree_optimum) report.conjecture2 = false;
  }
  report.chain_holds =
      report.pr_minimum <= report.svpnd_optimum && report.svpnd_optimum <= report.tree_optimum;
  report.tree_search_agrees = report.heuristic_tree == report.tree_optimum;
  report.conjecture1 = report.svpnd_optimum == report.tree_optimum;
  return report;
}

}  // namespace svpnd
