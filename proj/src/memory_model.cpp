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

#include "dnncost/memory_model.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "dnncost/cost_model.hpp"
#include "dnncost/error.hpp"

namespace dnncost {

std::string_view to_string(ExecutionMode mode) {
  return mode == ExecutionMode::kInference ? "inference" : "training";
}

LivenessProblem make_liveness_problem(const Graph& graph,
                                      const ShapeAnnotation& shapes,
                                      const AliasOptions& aliasing) {
  LivenessProblem p;
  const std::size_t n = graph.size();
  p.sizes.resize(n);
  p.producers.resize(n);
  p.outputs.assign(n, false);
  p.may_alias.assign(n, false);
  for (NodeIndex i = 0; i < n; ++i) {
    p.sizes[i] = shapes[i].element_count();
    p.producers[i] = graph.producers(i);
    const LayerKind kind = graph.node(i).kind();
    p.may_alias[i] =
        (aliasing.inplace_elementwise &&
         (kind == LayerKind::kActivation || kind == LayerKind::kDropout)) ||
        (aliasing.inplace_add && kind == LayerKind::kAdd);
  }
  for (NodeIndex o : graph.outputs()) p.outputs[o] = true;
  return p;
}

LivenessProfile simulate_liveness(const LivenessProblem& problem,
                                  std::span<const std::size_t> order) {
  const std::size_t n = problem.sizes.size();
  if (problem.producers.size() != n || problem.outputs.size() != n ||
      problem.may_alias.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent liveness problem");
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "order length does not match node count");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t step = 0; step < n; ++step) {
    if (order[step] >= n || pos[order[step]] != n) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    }
    pos[order[step]] = step;
  }

  // Last step at which each tensor is read (or its own step if unread).
  std::vector<std::size_t> last_use(n);
  for (std::size_t v = 0; v < n; ++v) last_use[v] = pos[v];
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p : problem.producers[v]) {
      if (p >= n || pos[p] >= pos[v]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "order is not a topological order");
      }
      last_use[p] = std::max(last_use[p], pos[v]);
    }
  }
  if (n == 0) return {};
  for (std::size_t v = 0; v < n; ++v) {
    if (problem.outputs[v]) last_use[v] = n - 1;
  }

  // Assign buffers in schedule order so an aliasing node sees the final
  // buffer of its producer.
  std::vector<std::size_t> buffer_of(n);
  std::vector<std::size_t> start, end;
  std::vector<std::uint64_t> size;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = order[step];
    std::size_t chosen = n;
    if (problem.may_alias[v]) {
      for (std::size_t p : problem.producers[v]) {
        if (!problem.outputs[p] && last_use[p] == step &&
            size[buffer_of[p]] >= problem.sizes[v]) {
          chosen = p;
          break;
        }
      }
    }
    if (chosen != n) {
      const std::size_t b = buffer_of[chosen];
      buffer_of[v] = b;
      end[b] = std::max(end[b], last_use[v]);
    } else {
      buffer_of[v] = size.size();
      start.push_back(step);
      end.push_back(last_use[v]);
      size.push_back(problem.sizes[v]);
    }
  }

  std::vector<std::int64_t> diff(n + 1, 0);
  for (std::size_t b = 0; b < size.size(); ++b) {
    diff[start[b]] += static_cast<std::int64_t>(size[b]);
    diff[end[b] + 1] -= static_cast<std::int64_t>(size[b]);
  }
  LivenessProfile profile;
  profile.live.resize(n);
  std::int64_t running = 0;
  for (std::size_t step = 0; step < n; ++step) {
    running += diff[step];
    profile.live[step] = static_cast<std::uint64_t>(running);
    if (profile.live[step] > profile.peak) {
      profile.peak = profile.live[step];
      profile.peak_step = step;
    }
  }
  return profile;
}

std::uint64_t liveness_peak(const Graph& graph, const ShapeAnnotation& shapes,
                            const std::vector<NodeIndex>& order,
                            const AliasOptions& aliasing) {
  if (!is_topological_order(graph, order)) {
    throw Error(ErrorCode::kInvalidArgument,
                "order is not a topological order of the graph");
  }
  return simulate_liveness(make_liveness_problem(graph, shapes, aliasing),
                           order)
      .peak;
}

namespace {

void check_config(std::uint64_t batch, const MemoryConfig& config) {
  if (batch < 1) {
    throw Error(ErrorCode::kInvalidArgument, "batch must be >= 1");
  }
  const std::uint64_t b = config.bytes_per_element;
  if (b != 1 && b != 2 && b != 4 && b != 8) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("bytes_per_element must be 1, 2, 4 or 8 (got {})",
                            b));
  }
}

struct PerImage {
  std::uint64_t params = 0;
  std::uint64_t all_activations = 0;
  std::uint64_t peak = 0;
};

PerImage per_image(const Graph& graph, const ShapeAnnotation& shapes,
                   const MemoryConfig& config) {
  CostOptions opts;
  opts.include_bias = config.include_bias;
  const ModelCost cost = model_cost(graph, shapes, opts);
  PerImage r;
  r.params = cost.totals.params;
  r.all_activations = cost.totals.activations;
  r.peak = liveness_peak(graph, shapes, topological_order(graph),
                         config.aliasing);
  return r;
}

MemoryEstimate estimate(const PerImage& img, std::uint64_t batch,
                        const MemoryConfig& config) {
  check_config(batch, config);
  const std::uint64_t bpe = config.bytes_per_element;
  MemoryEstimate e;
  e.batch = batch;
  e.weight_bytes = img.params * bpe;
  const bool resident_all =
      config.mode == ExecutionMode::kTraining || !config.reuse_buffers;
  e.activation_elements_per_image =
      resident_all ? img.all_activations : img.peak;
  e.peak_activation_bytes = e.activation_elements_per_image * batch * bpe;
  if (config.mode == ExecutionMode::kTraining) {
    e.gradient_bytes = (img.params + img.all_activations * batch) * bpe;
  }
  e.fixed_overhead_bytes = config.fixed_overhead_bytes;
  e.total_bytes = e.weight_bytes + e.peak_activation_bytes + e.gradient_bytes +
                  e.fixed_overhead_bytes;
  return e;
}

}  // namespace

MemoryEstimate footprint(const Graph& graph, const ShapeAnnotation& shapes,
                         std::uint64_t batch, const MemoryConfig& config) {
  check_config(batch, config);
  return estimate(per_image(graph, shapes, config), batch, config);
}

std::vector<MemoryEstimate> footprint_vs_batch(
    const Graph& graph, const ShapeAnnotation& shapes,
    std::span<const std::uint64_t> batches, const MemoryConfig& config) {
  if (batches.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "batch list is empty");
  }
  for (std::uint64_t b : batches) check_config(b, config);
  const PerImage img = per_image(graph, shapes, config);
  std::vector<MemoryEstimate> out;
  out.reserve(batches.size());
  for (std::uint64_t b : batches) out.push_back(estimate(img, b, config));
  return out;
}

}  // namespace dnncost
