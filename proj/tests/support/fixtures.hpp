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

#ifndef SVPND_TESTS_SUPPORT_FIXTURES_HPP_
#define SVPND_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "svpnd/model.hpp"

namespace svpnd::testing {

struct E {
  NodeId u;
  NodeId v;
  Rational cost = 1;
};

// Nodes labelled "0".."n-1".
Network make_network(int n, std::initializer_list<E> edges);
Network make_network(int n, const std::vector<E>& edges);
Instance make_instance(int n, std::initializer_list<E> edges,
                       std::vector<std::int64_t> bounds);

Instance triangle(std::vector<std::int64_t> bounds = {1, 1, 1});
// Cycle 0-1-...-(n-1)-0 with edge l = {l, l+1 mod n} costed costs[l].
Instance cycle(const std::vector<Rational>& costs,
               std::vector<std::int64_t> bounds);
Instance unit_cycle(int n);
Instance complete(int n, Rational cost = 1);

Path P(std::initializer_list<NodeId> nodes);
EdgeId edge_of(const Network& network, NodeId a, NodeId b);
std::vector<EdgeId> edges_of(const Network& network,
                             std::initializer_list<std::pair<NodeId, NodeId>> pairs);

// Tree with 8 unit terminals t1..t8 (ids 0..7) and non-terminals a, b, c
// (ids 8, 9, 10): t1 t2 t3 hang off a, t4 t5 off b, t6 t7 t8 off c, and
// a-b, b-c join the hubs. Unit costs. The network also has the non-tree
// edges t3-t4, t5-t6 and a-c.
struct EightTree {
  static constexpr NodeId a = 8, b = 9, c = 10;
  Instance instance;
  std::vector<EdgeId> tree;
  EdgeId e;  // a-b, splitting the terminals 3 | 5
};
EightTree eight_tree();

}  // namespace svpnd::testing

#endif  // SVPND_TESTS_SUPPORT_FIXTURES_HPP_
