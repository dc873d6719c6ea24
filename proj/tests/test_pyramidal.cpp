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

#include <cstdlib>
#include <functional>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "svpnd/error.hpp"
#include "svpnd/lab.hpp"
#include "svpnd/pyramidal.hpp"

using namespace svpnd;
using namespace svpnd::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

// Path from s to t on the cycle 0..k-1, walking forward (+1) or backward.
Path ring_walk(int k, NodeId s, NodeId t, bool forward) {
  Path p{{s}, false};
  for (NodeId v = s; v != t;) {
    v = forward ? (v + 1) % k : (v + k - 1) % k;
    p.nodes.push_back(v);
  }
  return p;
}

PrPathSystem random_ring_system(int k, NodeId source, Rng& rng) {
  PrPathSystem sys{source, {}};
  for (NodeId t = 0; t < k; ++t) {
    if (t != source) sys.paths[t] = ring_walk(k, source, t, rng.uniform(0, 1) == 1);
  }
  return sys;
}

std::vector<Rational> random_costs(Rng& rng, int k, std::int64_t hi) {
  std::vector<Rational> costs;
  for (int l = 0; l < k; ++l) costs.push_back(Rational(rng.uniform(1, hi), rng.uniform(1, 4)));
  return costs;
}

}  // namespace

TEST_CASE("pr_cost on the triangle") {
  PrInstance pr = make_pr_instance(triangle(), 0);
  PrPathSystem sys{0, {{1, P({0, 1})}, {2, P({0, 2})}}};
  PrProfile prof = pr_profile(pr, sys);
  const Network& net = pr.instance.network();
  CHECK(prof.y[edge_of(net, 0, 1)] == 1);
  CHECK(prof.y[edge_of(net, 0, 2)] == 1);
  CHECK(prof.y[edge_of(net, 1, 2)] == 0);
  CHECK(pr_cost(pr, sys) == Rational(2));
  CHECK(is_tree_system(net, sys));
}

TEST_CASE("pr_cost with two terminals is the path length") {
  Instance inst = make_instance(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 5}, {0, 3, 20}}, {1, 0, 0, 1});
  PrInstance pr = make_pr_instance(inst, 0);
  PrPathSystem sys{0, {{3, P({0, 1, 2, 3})}}};
  CHECK(pr_cost(pr, sys) == Rational(10));
  for (int y : pr_profile(pr, sys).y) CHECK(y <= 1);
}

TEST_CASE("pr_cost on C4 with every path through {0,1}") {
  PrInstance pr = make_pr_instance(unit_cycle(4), 0);
  PrPathSystem sys{0, {{1, P({0, 1})}, {2, P({0, 1, 2})}, {3, P({0, 1, 2, 3})}}};
  PrProfile prof = pr_profile(pr, sys);
  CHECK(prof.n == std::vector<int>{3, 0, 2, 1});  // edges 01, 03, 12, 23
  CHECK(prof.y == std::vector<int>{1, 0, 2, 1});
  CHECK(pr_cost(pr, sys) == Rational(4));
  auto oracle = oracle_pr_profile(pr.instance, 0, {{0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  CHECK(oracle.y == prof.y);
  CHECK(oracle.cost == Rational(4));
}

TEST_CASE("path system validation") {
  PrInstance pr = make_pr_instance(unit_cycle(4), 0);
  CHECK(code_of([&] {
          pr_cost(pr, {0, {{1, P({0, 1})}, {2, P({0, 1, 2})}, {3, P({0, 1, 2})}}});
        }) == ErrorCode::kPathEndpointMismatch);
  CHECK(code_of([&] {
          pr_cost(pr, {0, {{1, P({0, 1})}, {2, P({0, 1, 2})}}});
        }) == ErrorCode::kPathEndpointMismatch);
  CHECK(code_of([&] {
          pr_cost(pr, {0, {{1, P({0, 3, 0, 1})}, {2, P({0, 1, 2})}, {3, P({0, 3})}}});
        }) == ErrorCode::kNonSimplePath);
  CHECK(code_of([&] { make_pr_instance(triangle({2, 1, 1}), 0); }) == ErrorCode::kNonUnitBounds);
  Instance with_steiner = make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 0});
  CHECK(code_of([&] { make_pr_instance(with_steiner, 2); }) == ErrorCode::kUnknownTerminal);
}

TEST_CASE("pr_bruteforce small optima") {
  CHECK(pr_cost(make_pr_instance(unit_cycle(4), 0),
                pr_bruteforce(make_pr_instance(unit_cycle(4), 0))) == Rational(4));
  CHECK(pr_cost(make_pr_instance(unit_cycle(3), 0),
                pr_bruteforce(make_pr_instance(unit_cycle(3), 0))) == Rational(2));
  Instance two = make_instance(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 5}, {0, 3, 20}}, {1, 0, 0, 1});
  PrInstance pr = make_pr_instance(two, 3);
  PrPathSystem best = pr_bruteforce(pr);
  CHECK(best.paths.at(0) == P({3, 2, 1, 0}));
  CHECK(pr_cost(pr, best) == Rational(10));
}

TEST_CASE("pr_bruteforce tie-break is the first system in path order") {
  PrInstance pr = make_pr_instance(unit_cycle(4), 0);
  PrPathSystem best = pr_bruteforce(pr);
  CHECK(best.paths.at(1) == P({0, 1}));
  CHECK(best.paths.at(2) == P({0, 1, 2}));
  CHECK(best.paths.at(3) == P({0, 1, 2, 3}));
}

TEST_CASE("pr_bruteforce budget") {
  PrInstance pr = make_pr_instance(complete(5), 0);
  CHECK(code_of([&] { pr_bruteforce(pr, false, 100); }) == ErrorCode::kBudgetExceeded);
}

TEST_CASE("trail mode matches path mode on rings and never does worse elsewhere") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Instance ring = make_ring(random_costs(rng, 5, 9), std::vector<std::int64_t>(5, 1));
    PrInstance pr = make_pr_instance(ring, 0);
    CHECK(pr_cost(pr, pr_bruteforce(pr, true)) == pr_cost(pr, pr_bruteforce(pr, false)));
  }
  Instance bowtie = make_instance(5, {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}},
                                  {1, 1, 1, 1, 1});
  PrInstance pr = make_pr_instance(bowtie, 0);
  PrPathSystem trails = pr_bruteforce(pr, true);
  CHECK(pr_cost(pr, trails) <= pr_cost(pr, pr_bruteforce(pr, false)));
}

TEST_CASE("contraction of alternate terminals on C6") {
  Instance c6 = make_ring(std::vector<Rational>(6, 1), {1, 0, 1, 0, 1, 0});
  RingContraction rc = contract_nonterminals_on_ring(c6);
  CHECK(rc.contracted.network().num_nodes() == 3);
  CHECK(is_ring(rc.contracted.network()));
  CHECK(rc.contracted.network().costs() == std::vector<Rational>{2, 2, 2});
  CHECK(rc.original_node == std::vector<NodeId>{0, 2, 4});
  CHECK(rc.arcs.at({0, 1}) == std::vector<NodeId>{0, 1, 2});
  CHECK(rc.arcs.at({0, 2}) == std::vector<NodeId>{0, 5, 4});
  CHECK(rc.contracted.num_terminals() == 3);
}

TEST_CASE("contraction of an all-terminal ring is the identity") {
  Instance c5 = make_ring({1, 2, 3, 4, 5}, std::vector<std::int64_t>(5, 1));
  RingContraction rc = contract_nonterminals_on_ring(c5);
  CHECK(rc.contracted == c5);
  CHECK(rc.arcs.size() == 5);
}

TEST_CASE("contraction to two terminals") {
  Instance c4 = make_ring({1, 2, 3, 4}, {1, 0, 1, 0});
  CHECK(code_of([&] { contract_nonterminals_on_ring(c4); }) == ErrorCode::kDegenerateRing);
  // The two arcs cost 1+2 = 3 and 3+4 = 7; the cheaper one wins.
  PrInstance pr = make_pr_instance(c4, 0);
  PrPathSystem sys = ring_pr_optimal(pr);
  CHECK(sys.paths.at(2) == P({0, 1, 2}));
  CHECK(pr_cost(pr, sys) == Rational(3));
  CHECK(pr_cost(pr, pr_bruteforce(pr)) == Rational(3));
}

TEST_CASE("contraction errors") {
  CHECK(code_of([&] { contract_nonterminals_on_ring(complete(4)); }) == ErrorCode::kNotARing);
  Instance lonely = cycle({1, 1, 1}, {1, 0, 0});
  CHECK(code_of([&] { contract_nonterminals_on_ring(lonely); }) == ErrorCode::kAllNodesNonterminal);
  CHECK(code_of([&] { ring_pr_optimal(make_pr_instance(complete(4), 0)); }) == ErrorCode::kNotARing);
}

TEST_CASE("ring_pr_optimal on C4 and C3") {
  PrInstance c4 = make_pr_instance(unit_cycle(4), 0);
  PrPathSystem s4 = ring_pr_optimal(c4);
  CHECK(pr_cost(c4, s4) == Rational(4));
  CHECK(is_tree_system(c4.instance.network(), s4));
  // Ties go to deleting arc {0,1}; the surviving path is 1-2-3-0.
  PrProfile p4 = pr_profile(c4, s4);
  const Network& n4 = c4.instance.network();
  CHECK(p4.y[edge_of(n4, 0, 1)] == 0);
  CHECK(p4.y[edge_of(n4, 1, 2)] == 1);
  CHECK(p4.y[edge_of(n4, 2, 3)] == 2);
  CHECK(p4.y[edge_of(n4, 0, 3)] == 1);

  PrInstance c3 = make_pr_instance(unit_cycle(3), 1);
  PrPathSystem s3 = ring_pr_optimal(c3);
  CHECK(pr_cost(c3, s3) == Rational(2));
  int at_half = 0;
  for (int y : pr_profile(c3, s3).y) at_half += y == 1;
  CHECK(at_half == 2);
}

TEST_CASE("ring_pr_optimal on C5 with one expensive edge") {
  PrInstance pr = make_pr_instance(make_ring({5, 1, 1, 1, 1}, std::vector<std::int64_t>(5, 1)), 0);
  PrPathSystem sys = ring_pr_optimal(pr);
  PrProfile prof = pr_profile(pr, sys);
  CHECK(prof.y[edge_of(pr.instance.network(), 0, 1)] == 0);
  // Frozen from the brute-force oracle over all 2^4 systems.
  Rational brute = pr_cost(pr, pr_bruteforce(pr));
  CHECK(brute == Rational(6));
  CHECK(pr_cost(pr, sys) == brute);
}

TEST_CASE("ring_pr_optimal equals brute force on rings up to 12 terminals") {
  Rng rng(77);
  for (int k = 2; k <= 12; ++k) {
    for (int trial = 0; trial < (k <= 8 ? 8 : 2); ++trial) {
      CAPTURE(k);
      int extra = static_cast<int>(rng.uniform(0, 3));
      Instance ring = random_ring(rng, k, extra, {1, 20}, 1);
      // Rational costs too.
      std::vector<Rational> costs = random_costs(rng, ring.network().num_nodes(), 20);
      Instance frac = make_ring(costs, ring.bounds());
      for (const Instance* inst : {&ring, &frac}) {
        NodeId source = inst->terminals()[rng.uniform(0, k - 1)];
        PrInstance pr = make_pr_instance(*inst, source);
        PrPathSystem opt = ring_pr_optimal(pr);
        CHECK(is_tree_system(inst->network(), opt));
        CHECK(pr_cost(pr, opt) == pr_cost(pr, pr_bruteforce(pr)));
      }
    }
  }
}

TEST_CASE("ring increment claims on random path systems") {
  Rng rng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = static_cast<int>(rng.uniform(3, 10));
    Instance ring = make_ring(std::vector<Rational>(k, 1), std::vector<std::int64_t>(k, 1));
    NodeId source = static_cast<NodeId>(rng.uniform(0, k - 1));
    PrInstance pr = make_pr_instance(ring, source);
    PrProfile prof = pr_profile(pr, random_ring_system(k, source, rng));
    const Network& net = ring.network();
    for (NodeId v = 0; v < k; ++v) {
      EdgeId e = edge_of(net, v, (v + 1) % k);
      EdgeId f = edge_of(net, v, (v + k - 1) % k);
      // Odd k allows two equal heights of (k-1)/2 where n crosses k/2.
      if (k % 2 == 0) {
        CHECK(std::abs(prof.y[e] - prof.y[f]) == 1);
      } else {
        CHECK(std::abs(prof.y[e] - prof.y[f]) <= 1);
        if (prof.y[e] == prof.y[f]) CHECK(2 * prof.y[e] == k - 1);
      }
      if (v == source) {
        CHECK(prof.n[e] + prof.n[f] == k - 1);
      } else {
        CHECK(std::abs(prof.n[e] - prof.n[f]) == 1);
      }
    }
  }
}

TEST_CASE("odd rings have flat height steps") {
  Instance c3 = make_ring(std::vector<Rational>(3, 1), std::vector<std::int64_t>(3, 1));
  PrInstance pr = make_pr_instance(c3, 0);
  PrProfile prof = pr_profile(pr, {0, {{1, P({0, 1})}, {2, P({0, 1, 2})}}});
  const Network& net = c3.network();
  CHECK(prof.n[edge_of(net, 0, 1)] == 2);
  CHECK(prof.n[edge_of(net, 1, 2)] == 1);
  CHECK(prof.y[edge_of(net, 0, 1)] == prof.y[edge_of(net, 1, 2)]);
}

TEST_CASE("pyramid lower bound along the ring") {
  Rng rng(321);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = static_cast<int>(rng.uniform(3, 10));
    Instance ring = make_ring(random_costs(rng, k, 30), std::vector<std::int64_t>(k, 1));
    NodeId source = static_cast<NodeId>(rng.uniform(0, k - 1));
    PrInstance pr = make_pr_instance(ring, source);
    PrPathSystem sys = random_ring_system(k, source, rng);
    PrProfile prof = pr_profile(pr, sys);
    // Ring edge l joins l and l+1; twice the heights avoid halves for odd k.
    std::vector<int> n(k), y(k);
    for (int l = 0; l < k; ++l) {
      EdgeId e = edge_of(ring.network(), l, (l + 1) % k);
      n[l] = prof.n[e];
      y[l] = prof.y[e];
    }
    int start = -1;
    for (int l = 0; l < k && start < 0; ++l) {
      if (k % 2 == 0 ? 2 * n[l] == k : (2 * y[l] == k - 1 && 2 * y[(l + k - 1) % k] == k - 1)) start = l;
    }
    REQUIRE(start >= 0);
    for (int m = 0; m < k; ++m) {
      // Position l = m for even k, m + 1/2 for odd k; bound |k/2 - l|.
      int twice_bound = std::abs(k - 2 * m - (k % 2));
      CHECK(2 * y[(start + m) % k] >= twice_bound);
    }
    CHECK(pr_cost(pr, sys) >= pr_cost(pr, ring_pr_optimal(pr)));
  }
}

TEST_CASE("tree PR cost is independent of the source") {
  EightTree f = eight_tree();
  TreeSolution tree = tree_capacities(f.instance, f.tree);
  for (NodeId s : f.instance.terminals()) {
    PrInstance pr = make_pr_instance(f.instance, s);
    PrPathSystem sys = tree_to_pr(f.instance, tree, s);
    CHECK(pr_cost(pr, sys) == tree_cost(f.instance, tree));
    std::vector<int> y = pr_profile(pr, sys).y;
    CHECK(std::vector<std::int64_t>(y.begin(), y.end()) == tree.capacities);
    CHECK(pr_tree_to_tree(pr, sys) == tree);
  }
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_connected(rng, 6, 50, {}, 1);
    TreeSolution t = optimal_tree_search(inst);
    std::optional<std::vector<int>> first;
    for (NodeId s : inst.terminals()) {
      PrInstance pr = make_pr_instance(inst, s);
      auto y = pr_profile(pr, tree_to_pr(inst, t, s)).y;
      if (!first) first = y;
      CHECK(y == *first);
    }
  }
}

TEST_CASE("path on three terminals from the middle") {
  Instance p3 = make_instance(3, {{0, 1, 2}, {1, 2, 5}}, {1, 1, 1});
  TreeSolution t = tree_capacities(p3, std::vector<EdgeId>{0, 1});
  PrInstance pr = make_pr_instance(p3, 1);
  PrPathSystem sys = tree_to_pr(p3, t, 1);
  CHECK(pr_profile(pr, sys).y == std::vector<int>{1, 1});
  CHECK(pr_cost(pr, sys) == Rational(7));
  CHECK(tree_cost(p3, t) == Rational(7));
}

TEST_CASE("C4 minus an edge round-trips") {
  Instance c4 = unit_cycle(4);
  std::vector<EdgeId> path = edges_of(c4.network(), {{0, 1}, {1, 2}, {2, 3}});
  TreeSolution t = tree_capacities(c4, path);
  for (NodeId s = 0; s < 4; ++s) {
    PrInstance pr = make_pr_instance(c4, s);
    PrPathSystem sys = tree_to_pr(c4, t, s);
    CHECK(pr_tree_to_tree(pr, sys) == t);
    CHECK(tree_to_pr(c4, pr_tree_to_tree(pr, sys), s) == sys);
  }
  PrInstance pr = make_pr_instance(c4, 0);
  PrPathSystem cyclic{0, {{1, P({0, 1})}, {2, P({0, 1, 2})}, {3, P({0, 3})}}};
  CHECK(pr_tree_to_tree(pr, cyclic).tree_edges.size() == 3);
  PrPathSystem both_ways{0, {{1, P({0, 3, 2, 1})}, {2, P({0, 1, 2})}, {3, P({0, 3})}}};
  CHECK_FALSE(is_tree_system(c4.network(), both_ways));
  CHECK(code_of([&] { pr_tree_to_tree(pr, both_ways); }) == ErrorCode::kNotATreeSystem);
}
