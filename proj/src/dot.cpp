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

#include "svpnd/dot.hpp"

#include <sstream>

namespace svpnd {
namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Instance& instance, const TreeSolution* tree) {
  const Network& net = instance.network();
  std::ostringstream dot;
  dot << "graph svpnd {\n";
  dot << "  node [shape=circle];\n";
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    dot << "  " << quoted(net.label(v));
    if (instance.is_terminal(v)) {
      dot << " [shape=box";
      if (instance.bound(v) != 1) dot << ", xlabel=" << quoted("b=" + std::to_string(instance.bound(v)));
      dot << "]";
    }
    dot << ";\n";
  }
  std::vector<bool> in_tree(net.num_edges(), false);
  if (tree) {
    for (EdgeId e : tree->tree_edges) in_tree[e] = true;
  }
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    dot << "  " << quoted(net.label(net.edge(e).u)) << " -- " << quoted(net.label(net.edge(e).v));
    if (!tree) {
      dot << " [label=" << quoted(net.cost(e).to_string()) << "]";
    } else if (in_tree[e]) {
      dot << " [label=" << quoted(std::to_string(tree->capacities[e])) << ", style=bold]";
    } else {
      dot << " [style=dotted]";
    }
    dot << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace svpnd
