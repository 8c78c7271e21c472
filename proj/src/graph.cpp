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

#include "dnncost/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <fmt/format.h>

#include "dnncost/error.hpp"

namespace dnncost {

NodeIndex Graph::add_node(LayerSpec spec) {
  if (index_.contains(spec.id())) {
    throw Error(ErrorCode::kDuplicateId,
                fmt::format("duplicate node id '{}'", spec.id()));
  }
  const NodeIndex i = nodes_.size();
  index_.emplace(spec.id(), i);
  nodes_.push_back(std::move(spec));
  producers_.emplace_back();
  consumers_.emplace_back();
  return i;
}

void Graph::connect(std::string_view from, std::string_view to) {
  connect(index_of(from), index_of(to));
}

void Graph::connect(NodeIndex from, NodeIndex to) {
  if (from >= size() || to >= size()) {
    throw Error(ErrorCode::kUnknownId, "edge endpoint out of range");
  }
  if (from == to || reaches(to, from)) {
    throw Error(ErrorCode::kCycle,
                fmt::format("edge '{}' -> '{}' introduces a cycle",
                            nodes_[from].id(), nodes_[to].id()));
  }
  edges_.push_back({from, to});
  producers_[to].push_back(from);
  consumers_[from].push_back(to);
}

void Graph::mark_output(std::string_view id) {
  const NodeIndex i = index_of(id);
  if (std::find(explicit_outputs_.begin(), explicit_outputs_.end(), i) ==
      explicit_outputs_.end()) {
    explicit_outputs_.push_back(i);
  }
}

std::optional<NodeIndex> Graph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Graph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::kUnknownId, fmt::format("unknown node id '{}'", id));
}

std::optional<NodeIndex> Graph::input() const {
  for (NodeIndex i = 0; i < size(); ++i) {
    if (nodes_[i].kind() == LayerKind::kInput) return i;
  }
  return std::nullopt;
}

std::vector<NodeIndex> Graph::outputs() const {
  if (!explicit_outputs_.empty()) return explicit_outputs_;
  std::vector<NodeIndex> sinks;
  for (NodeIndex i = 0; i < size(); ++i) {
    if (consumers_[i].empty()) sinks.push_back(i);
  }
  return sinks;
}

bool Graph::reaches(NodeIndex from, NodeIndex to) const {
  std::vector<bool> seen(size(), false);
  std::vector<NodeIndex> stack{from};
  while (!stack.empty()) {
    const NodeIndex n = stack.back();
    stack.pop_back();
    if (n == to) return true;
    if (seen[n]) continue;
    seen[n] = true;
    for (NodeIndex c : consumers_[n]) stack.push_back(c);
  }
  return false;
}

std::vector<NodeIndex> topological_order(const Graph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> indegree(n);
  for (NodeIndex i = 0; i < n; ++i) indegree[i] = graph.producers(i).size();

  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<NodeIndex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const NodeIndex i = ready.top();
    ready.pop();
    order.push_back(i);
    for (NodeIndex c : graph.consumers(i)) {
      if (--indegree[c] == 0) ready.push(c);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kCycle, "graph contains a cycle");
  }
  return order;
}

bool is_topological_order(const Graph& graph,
                          const std::vector<NodeIndex>& order) {
  if (order.size() != graph.size()) return false;
  std::vector<std::size_t> position(graph.size(), graph.size());
  for (std::size_t step = 0; step < order.size(); ++step) {
    const NodeIndex i = order[step];
    if (i >= graph.size() || position[i] != graph.size()) return false;
    position[i] = step;
  }
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const Edge& e) {
                       return position[e.from] < position[e.to];
                     });
}

std::string_view to_string(ViolationType type) {
  switch (type) {
    case ViolationType::kMissingInput: return "missing-input";
    case ViolationType::kMultipleInputs: return "multiple-inputs";
    case ViolationType::kArity: return "arity";
    case ViolationType::kReachability: return "reachability";
    case ViolationType::kCycle: return "cycle";
    case ViolationType::kAttribute: return "attribute";
  }
  return "unknown";
}

namespace {

void check_extent(const LayerSpec& spec, const char* what, Extent2 e,
                  std::int64_t minimum, std::vector<Violation>& out) {
  if (e.h < minimum || e.w < minimum) {
    out.push_back({ViolationType::kAttribute, spec.id(),
                   fmt::format("{} must be >= {} (got {}x{})", what, minimum,
                               e.h, e.w)});
  }
}

void check_attributes(const LayerSpec& spec, std::vector<Violation>& out) {
  if (const auto* conv = spec.get_if<Conv2dAttrs>()) {
    check_extent(spec, "kernel", conv->kernel, 1, out);
    check_extent(spec, "stride", conv->stride, 1, out);
    check_extent(spec, "padding", conv->padding, 0, out);
    if (conv->out_channels < 1) {
      out.push_back({ViolationType::kAttribute, spec.id(),
                     "out_channels must be >= 1"});
    }
    if (conv->groups < 1) {
      out.push_back(
          {ViolationType::kAttribute, spec.id(), "groups must be >= 1"});
    } else if (conv->out_channels % conv->groups != 0) {
      out.push_back({ViolationType::kAttribute, spec.id(),
                     fmt::format("out_channels {} not divisible by groups {}",
                                 conv->out_channels, conv->groups)});
    }
  } else if (const auto* pool = spec.get_if<PoolAttrs>()) {
    check_extent(spec, "kernel", pool->kernel, 1, out);
    check_extent(spec, "stride", pool->stride, 1, out);
    check_extent(spec, "padding", pool->padding, 0, out);
  } else if (const auto* fc = spec.get_if<FullyConnectedAttrs>()) {
    if (fc->out_features < 1) {
      out.push_back({ViolationType::kAttribute, spec.id(),
                     "out_features must be >= 1"});
    }
  } else if (const auto* lrn = spec.get_if<LrnAttrs>()) {
    if (lrn->local_size < 1) {
      out.push_back({ViolationType::kAttribute, spec.id(),
                     "local_size must be >= 1"});
    }
  } else if (const auto* drop = spec.get_if<DropoutAttrs>()) {
    if (!(drop->ratio >= 0.0 && drop->ratio < 1.0)) {
      out.push_back({ViolationType::kAttribute, spec.id(),
                     "dropout ratio must be in [0, 1)"});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Graph& graph) {
  std::vector<Violation> out;
  std::vector<NodeIndex> inputs;
  for (NodeIndex i = 0; i < graph.size(); ++i) {
    if (graph.node(i).kind() == LayerKind::kInput) inputs.push_back(i);
  }
  if (inputs.empty()) {
    out.push_back({ViolationType::kMissingInput, "", "graph has no Input node"});
  } else if (inputs.size() > 1) {
    for (std::size_t k = 1; k < inputs.size(); ++k) {
      out.push_back({ViolationType::kMultipleInputs,
                     graph.node(inputs[k]).id(),
                     "graph has more than one Input node"});
    }
  }

  for (NodeIndex i = 0; i < graph.size(); ++i) {
    const LayerSpec& spec = graph.node(i);
    const std::size_t indegree = graph.producers(i).size();
    const std::size_t need = spec.min_inputs();
    const bool ok = spec.variadic() ? indegree >= need : indegree == need;
    if (!ok) {
      out.push_back(
          {ViolationType::kArity, spec.id(),
           fmt::format("{} node has in-degree {}, requires {}{}",
                       to_string(spec.kind()), indegree,
                       spec.variadic() ? ">= " : "", need)});
    }
    check_attributes(spec, out);
  }

  // connect() already refuses cycles.
  bool acyclic = true;
  try {
    (void)topological_order(graph);
  } catch (const Error&) {
    acyclic = false;
    out.push_back({ViolationType::kCycle, "", "graph contains a cycle"});
  }

  if (!inputs.empty() && acyclic) {
    std::vector<bool> seen(graph.size(), false);
    std::vector<NodeIndex> stack{inputs.front()};
    while (!stack.empty()) {
      const NodeIndex n = stack.back();
      stack.pop_back();
      if (seen[n]) continue;
      seen[n] = true;
      for (NodeIndex c : graph.consumers(n)) stack.push_back(c);
    }
    for (NodeIndex i = 0; i < graph.size(); ++i) {
      if (!seen[i] && graph.node(i).kind() != LayerKind::kInput) {
        out.push_back({ViolationType::kReachability, graph.node(i).id(),
                       "node is not reachable from the input"});
      }
    }
  }
  return out;
}

void ensure_valid(const Graph& graph) {
  const auto violations = validate(graph);
  if (violations.empty()) return;
  const Violation& v = violations.front();
  const ErrorCode code = v.type == ViolationType::kCycle
                             ? ErrorCode::kCycle
                             : ErrorCode::kInvalidGraph;
  throw Error(code, fmt::format("{} violation(s); first: [{}] {}{}{}",
                                violations.size(), to_string(v.type),
                                v.node_id, v.node_id.empty() ? "" : ": ",
                                v.message));
}

}  // namespace dnncost
