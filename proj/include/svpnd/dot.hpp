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

#ifndef SVPND_DOT_HPP_
#define SVPND_DOT_HPP_

#include <string>

#include "svpnd/model.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {

// Graphviz rendering. Terminals are boxes, other nodes circles. Without a
// tree, edges carry their cost; with one, tree edges are bold and labelled
// with their capacity and the remaining edges are dotted.
std::string export_dot(const Instance& instance,
                       const TreeSolution* tree = nullptr);

}  // namespace svpnd

#endif  // SVPND_DOT_HPP_
