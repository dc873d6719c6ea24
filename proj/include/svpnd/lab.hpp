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

// Verification harness: random instance generators, the brute-force sVPND
// optimum, and batch runs that check the tree-routing statements on small
// instances.

#ifndef SVPND_LAB_HPP_
#define SVPND_LAB_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svpnd/model.hpp"

namespace svpnd {

// Brute-force optimum over all routings (one simple path per terminal pair);
// capacities are the exact worst-case loads. The first optimum in
// lexicographic order wins. Needs unit bounds; throws kBudgetExceeded.
VpnSolution bruteforce_svpnd(const Instance& instance,
                             std::uint64_t budget = kDefaultBudget);

// splitmix64: small, portable and byte-reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct CostRange {
  std::int64_t lo = 1;
  std::int64_t hi = 100;
};

// Ring whose nodes are labelled 0..n-1 in cyclic order; edge l joins l and
// l+1 mod n. bounds[v] = 0 marks a non-terminal.
Instance make_ring(const std::vector<Rational>& costs,
                   const std::vector<std::int64_t>& bounds);

// Ring with `terminals` terminals and `extra_nodes` non-terminals at random
// positions.
Instance random_ring(Rng& rng, int terminals, int extra_nodes, CostRange costs,
                     std::int64_t bound_max);
// Complete graph; every node a terminal.
Instance random_complete(Rng& rng, int nodes, CostRange costs,
                         std::int64_t bound_max);
// Random spanning tree plus each remaining pair with probability
// edge_percent / 100; between 2 and all nodes are terminals.
Instance random_connected(Rng& rng, int nodes, int edge_percent,
                          CostRange costs, std::int64_t bound_max);

enum class Family { kRing, kComplete, kRandomConnected };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

struct ExperimentConfig {
  Family family = Family::kRing;
  int min_size = 3;  // terminals for rings, nodes otherwise
  int max_size = 6;
  int instances_per_size = 10;
  std::uint64_t seed = 1;
  CostRange costs;
  bool ties_stress = false;  // overrides costs with [1, 3]
  std::int64_t bound_max = 1;
  int extra_nodes_max = 0;  // rings only
  int edge_percent = 50;    // random_connected only
  std::uint64_t budget = kDefaultBudget;
};

enum class RecordStatus { kOk, kBudgetExceeded, kCounterexample, kBug };

std::string_view to_string(RecordStatus s);

struct ConjectureRecord {
  int index = 0;
  Family family = Family::kRing;
  int size = 0;
  std::uint64_t seed = 0;
  Instance instance;
  bool reduced = false;  // battery ran on the unit-bound reduction
  RecordStatus status = RecordStatus::kOk;
  std::optional<Rational> svpnd_optimum;
  std::optional<Rational> tree_optimum;
  std::optional<Rational> heuristic_tree;
  std::optional<Rational> pr_minimum;
  std::optional<Rational> lemma1_bound;
  bool lemma1_tight = false;
  bool chain_holds = false;
  bool conjecture1 = false;
  bool conjecture2 = false;
  bool claims_hold = false;
  std::optional<bool> ring_oracle;  // rings only
  std::optional<bool> reduction_round_trip;
  std::vector<std::string> notes;
};

struct ExperimentSummary {
  int instances = 0;
  int ok = 0;
  int budget_exceeded = 0;
  int counterexamples = 0;
  int bugs = 0;
  bool aborted = false;
};

// Full check battery on one instance.
ConjectureRecord check_instance(const Instance& instance, std::uint64_t budget);

// Streams one record per generated instance, in index order. Stops after
// the first record classified as a bug.
ExperimentSummary run_experiment(
    const ExperimentConfig& config,
    const std::function<void(const ConjectureRecord&)>& sink);

}  // namespace svpnd

#endif  // SVPND_LAB_HPP_
