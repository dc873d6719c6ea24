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

// Core domain types: networks with exact edge costs, hose-model instances,
// demand sets, paths and virtual private network solutions.

#ifndef SVPND_MODEL_HPP_
#define SVPND_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "svpnd/rational.hpp"

namespace svpnd {

using NodeId = int;
using EdgeId = int;

// Unordered node pair, smaller id first.
using NodePair = std::pair<NodeId, NodeId>;

inline NodePair make_node_pair(NodeId a, NodeId b) {
  return a < b ? NodePair{a, b} : NodePair{b, a};
}

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

struct Edge {
  NodeId u;
  NodeId v;

  NodeId other(NodeId x) const { return x == u ? v : u; }
  bool has(NodeId x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId node;
  EdgeId edge;
};

struct EdgeSpec {
  NodeId u;
  NodeId v;
  Rational cost;
};

// Undirected simple graph with dense node ids 0..n-1. Edge ids follow the
// lexicographic order of (min endpoint, max endpoint), and adjacency lists
// are sorted by neighbour id, so every traversal is deterministic.
class Network {
 public:
  Network() = default;
  // Throws std::invalid_argument on self-loops, parallel edges or ids out of
  // range; use validate_instance for user-facing diagnostics.
  Network(std::vector<std::string> labels, std::vector<EdgeSpec> edges);

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& cost(EdgeId e) const { return costs_[e]; }
  const std::vector<Rational>& costs() const { return costs_; }
  std::span<const Incidence> neighbors(NodeId v) const { return adjacency_[v]; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find_node(const std::string& label) const;

  bool is_connected() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_ &&
           a.costs_ == b.costs_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<Rational> costs_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<NodePair, EdgeId> edge_index_;
  std::unordered_map<std::string, NodeId> node_index_;
};

// Network plus terminal set W with positive integer bounds b(i).
class Instance {
 public:
  Instance() = default;
  // bounds[v] > 0 marks v as a terminal. Use validate_instance to build
  // instances from untrusted data.
  Instance(Network network, std::vector<std::int64_t> bounds);

  const Network& network() const { return network_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  std::int64_t bound(NodeId v) const { return bounds_[v]; }
  const std::vector<std::int64_t>& bounds() const { return bounds_; }
  bool is_terminal(NodeId v) const { return bounds_[v] > 0; }
  // Position of v in terminals(), or -1.
  int terminal_index(NodeId v) const { return terminal_index_[v]; }
  std::int64_t total_bound() const;
  bool has_unit_bounds() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.network_ == b.network_ && a.bounds_ == b.bounds_;
  }

 private:
  Network network_;
  std::vector<std::int64_t> bounds_;
  std::vector<NodeId> terminals_;
  std::vector<int> terminal_index_;
};

struct RawEdge {
  std::string u;
  std::string v;
  Rational cost;
};

struct RawTerminal {
  std::string node;
  std::int64_t bound = 1;
};

// Label-based instance description as read from a file.
struct RawInstance {
  std::vector<std::string> nodes;
  std::vector<RawEdge> edges;
  std::vector<RawTerminal> terminals;
};

// Throws ValidationError listing every violation found.
Instance validate_instance(const RawInstance& raw);
RawInstance to_raw(const Instance& instance);

// Symmetric demands keyed by unordered terminal pairs; d_ii is implicitly 0.
class DemandSet {
 public:
  void set(NodeId i, NodeId j, const Rational& value);
  Rational at(NodeId i, NodeId j) const;
  const std::map<NodePair, Rational>& entries() const { return values_; }
  bool empty() const { return values_.empty(); }
  // Sum over j of d_ij.
  Rational row_sum(NodeId i) const;
  DemandSet scaled(const Rational& factor) const;

  friend bool operator==(const DemandSet&, const DemandSet&) = default;

 private:
  std::map<NodePair, Rational> values_;
};

// True iff every terminal's row sum is within its bound. Throws
// Error(kUnknownTerminal) when a key names a non-terminal.
bool is_valid_demand_set(const Instance& instance, const DemandSet& demands);

// Node sequence; node-simple unless flagged as a trail, in which case only
// edges must not repeat.
struct Path {
  std::vector<NodeId> nodes;
  bool trail = false;

  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

Path reversed(const Path& path);

// Edge sequence of a path; throws Error(kInvalidPath) on non-adjacent steps.
std::vector<EdgeId> path_edges(const Network& network, const Path& path);

// Checks endpoints and simplicity (node-simple, or edge-simple for trails).
// Throws kPathEndpointMismatch, kNonSimplePath or kInvalidPath.
void check_path(const Network& network, const Path& path, NodeId from,
                NodeId to);

// All simple paths (or trails) from -> to in lexicographic node order.
// Throws Error(kBudgetExceeded) once more than `limit` are found.
std::vector<Path> enumerate_paths(const Network& network, NodeId from,
                                  NodeId to, bool trails,
                                  std::uint64_t limit = kDefaultBudget);

struct VpnSolution {
  std::map<NodePair, Path> paths;
  std::vector<Rational> capacities;  // indexed by EdgeId

  Rational cost(const Network& network) const;
  friend bool operator==(const VpnSolution&, const VpnSolution&) = default;
};

bool is_ring(const Network& network);

// Edge costs scaled to integers by the lcm of their denominators, for hot
// enumeration loops. Throws std::overflow_error if the scale does not fit.
class ScaledCosts {
 public:
  explicit ScaledCosts(const Network& network);

  std::int64_t operator[](EdgeId e) const { return scaled_[e]; }
  std::int64_t scale() const { return scale_; }
  Rational unscale(__int128 total) const;

 private:
  std::vector<std::int64_t> scaled_;
  std::int64_t scale_ = 1;
};

}  // namespace svpnd

#endif  // SVPND_MODEL_HPP_
