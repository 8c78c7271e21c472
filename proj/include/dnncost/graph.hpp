// Copyright 2026 The dnncost Authors. All Rights Reserved.
//
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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dnncost/layer.hpp"

namespace dnncost {

using NodeIndex = std::size_t;

struct Edge {
  NodeIndex from;
  NodeIndex to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A network as a DAG of LayerSpec nodes. Every node produces one tensor;
/// fan-out is expressed with multiple edges. The producer order of a node
/// is the order in which its incoming edges were connected, which fixes the
/// channel order of Concat.
///
/// Construction is single-writer. A graph that passes validate() is treated
/// as immutable and may be read concurrently.
class Graph {
 public:
  /// Throws Error{kDuplicateId} if the id is taken.
  NodeIndex add_node(LayerSpec spec);

  /// Throws Error{kUnknownId} for missing endpoints and Error{kCycle} if the
  /// edge would close a cycle.
  void connect(std::string_view from, std::string_view to);
  void connect(NodeIndex from, NodeIndex to);

  /// Overrides the default output set (nodes without consumers).
  void mark_output(std::string_view id);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const LayerSpec& node(NodeIndex i) const { return nodes_.at(i); }
  const std::vector<LayerSpec>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeIndex>& producers(NodeIndex i) const {
    return producers_.at(i);
  }
  const std::vector<NodeIndex>& consumers(NodeIndex i) const {
    return consumers_.at(i);
  }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws Error{kUnknownId}.
  NodeIndex index_of(std::string_view id) const;

  /// First Input node, if any.
  std::optional<NodeIndex> input() const;
  /// Explicitly marked outputs, or every node without consumers.
  std::vector<NodeIndex> outputs() const;
  bool has_explicit_outputs() const { return !explicit_outputs_.empty(); }

 private:
  bool reaches(NodeIndex from, NodeIndex to) const;

  std::vector<LayerSpec> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeIndex>> producers_;
  std::vector<std::vector<NodeIndex>> consumers_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<NodeIndex> explicit_outputs_;
};

/// Producers before consumers; ties broken by insertion order, so the result
/// is deterministic. Equals insertion order for graphs built front to back.
/// Throws Error{kCycle}.
std::vector<NodeIndex> topological_order(const Graph& graph);

/// True iff order is a permutation of the graph's nodes that respects every
/// edge.
bool is_topological_order(const Graph& graph,
                          const std::vector<NodeIndex>& order);

enum class ViolationType {
  kMissingInput,
  kMultipleInputs,
  kArity,
  kReachability,
  kCycle,
  kAttribute,
};

std::string_view to_string(ViolationType type);

struct Violation {
  ViolationType type;
  std::string node_id;
  std::string message;
};

/// Reports every violation found, not just the first. An empty result means
/// the graph is valid.
std::vector<Violation> validate(const Graph& graph);

/// Throws Error{kInvalidGraph} (or kCycle) carrying the first violation.
void ensure_valid(const Graph& graph);

}  // namespace dnncost
