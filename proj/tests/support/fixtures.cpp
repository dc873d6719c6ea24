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

#include "support/fixtures.hpp"

#include <stdexcept>

namespace svpnd::testing {

Network make_network(int n, const std::vector<E>& edges) {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  std::vector<EdgeSpec> specs;
  for (const E& e : edges) specs.push_back({e.u, e.v, e.cost});
  return Network(labels, specs);
}

Network make_network(int n, std::initializer_list<E> edges) {
  return make_network(n, std::vector<E>(edges));
}

Instance make_instance(int n, std::initializer_list<E> edges, std::vector<std::int64_t> bounds) {
  return Instance(make_network(n, edges), std::move(bounds));
}

Instance triangle(std::vector<std::int64_t> bounds) {
  return make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, std::move(bounds));
}

Instance cycle(const std::vector<Rational>& costs, std::vector<std::int64_t> bounds) {
  const int n = static_cast<int>(costs.size());
  std::vector<E> edges;
  for (int l = 0; l < n; ++l) edges.push_back({l, (l + 1) % n, costs[l]});
  return Instance(make_network(n, edges), std::move(bounds));
}

Instance unit_cycle(int n) {
  return cycle(std::vector<Rational>(n, 1), std::vector<std::int64_t>(n, 1));
}

Instance complete(int n, Rational cost) {
  std::vector<E> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, cost});
  }
  return Instance(make_network(n, edges), std::vector<std::int64_t>(n, 1));
}

Path P(std::initializer_list<NodeId> nodes) { return Path{nodes, false}; }

EdgeId edge_of(const Network& network, NodeId a, NodeId b) {
  auto e = network.find_edge(a, b);
  if (!e) throw std::invalid_argument("fixture edge missing");
  return *e;
}

std::vector<EdgeId> edges_of(const Network& network,
                             std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<EdgeId> out;
  for (auto [a, b] : pairs) out.push_back(edge_of(network, a, b));
  return out;
}

EightTree eight_tree() {
  constexpr NodeId a = EightTree::a, b = EightTree::b, c = EightTree::c;
  std::vector<std::string> labels{"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "a", "b", "c"};
  std::vector<std::pair<NodeId, NodeId>> tree_pairs{{0, a}, {1, a}, {2, a}, {a, b}, {3, b},
                                                    {4, b}, {b, c}, {5, c}, {6, c}, {7, c}};
  std::vector<EdgeSpec> specs;
  for (auto [u, v] : tree_pairs) specs.push_back({u, v, 1});
  specs.push_back({2, 3, 1});
  specs.push_back({4, 5, 1});
  specs.push_back({a, c, 1});
  std::vector<std::int64_t> bounds(11, 0);
  for (NodeId t = 0; t < 8; ++t) bounds[t] = 1;
  EightTree out{Instance(Network(labels, specs), bounds), {}, 0};
  const Network& net = out.instance.network();
  for (auto [u, v] : tree_pairs) out.tree.push_back(edge_of(net, u, v));
  out.e = edge_of(net, a, b);
  return out;
}

}  // namespace svpnd::testing
