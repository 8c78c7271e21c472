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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dnncost/graph.hpp"
#include "dnncost/shape_infer.hpp"

namespace dnncost {

/// Which outputs may overwrite their input buffer in place. An alias is only
/// taken when the consumer is the producer's last reader in the schedule and
/// the producer is not a network output.
struct AliasOptions {
  bool inplace_elementwise = true;  // Activation and Dropout
  bool inplace_add = false;

  friend bool operator==(const AliasOptions&, const AliasOptions&) = default;
};

/// Graph-independent liveness input: one tensor per node, sized in elements.
struct LivenessProblem {
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<std::size_t>> producers;
  std::vector<bool> outputs;    // stay live until the last step
  std::vector<bool> may_alias;  // node may take over a dying producer's buffer
};

struct LivenessProfile {
  std::uint64_t peak = 0;
  std::size_t peak_step = 0;
  std::vector<std::uint64_t> live;  // live elements at each schedule step
};

LivenessProblem make_liveness_problem(const Graph& graph,
                                      const ShapeAnnotation& shapes,
                                      const AliasOptions& aliasing = {});

/// Executes the schedule: a tensor becomes live when its node runs and dies
/// after its last consumer runs. Live sets at a step include the running
/// node's inputs and output. Throws Error{kInvalidArgument} for an order that
/// is not a topological permutation.
LivenessProfile simulate_liveness(const LivenessProblem& problem,
                                  std::span<const std::size_t> order);

/// Peak live elements for one image.
std::uint64_t liveness_peak(const Graph& graph, const ShapeAnnotation& shapes,
                            const std::vector<NodeIndex>& order,
                            const AliasOptions& aliasing = {});

enum class ExecutionMode { kInference, kTraining };

std::string_view to_string(ExecutionMode mode);

struct MemoryConfig {
  std::uint64_t bytes_per_element = 4;
  ExecutionMode mode = ExecutionMode::kInference;
  std::uint64_t fixed_overhead_bytes = 0;
  AliasOptions aliasing;
  // false: every materialized tensor stays resident for the whole pass, as in
  // frameworks that allocate one blob per layer.
  bool reuse_buffers = true;
  bool include_bias = false;
};

struct MemoryEstimate {
  std::uint64_t batch = 1;
  std::uint64_t weight_bytes = 0;
  std::uint64_t peak_activation_bytes = 0;
  std::uint64_t gradient_bytes = 0;
  std::uint64_t fixed_overhead_bytes = 0;
  std::uint64_t total_bytes = 0;
  // Per-image resident elements behind peak_activation_bytes.
  std::uint64_t activation_elements_per_image = 0;
};

/// Inference: weights + liveness peak (or all tensors when buffers are not
/// reused), scaled by batch. Training: all activations resident, plus
/// gradients for every parameter and activation.
MemoryEstimate footprint(const Graph& graph, const ShapeAnnotation& shapes,
                         std::uint64_t batch, const MemoryConfig& config = {});

std::vector<MemoryEstimate> footprint_vs_batch(
    const Graph& graph, const ShapeAnnotation& shapes,
    std::span<const std::uint64_t> batches, const MemoryConfig& config = {});

}  // namespace dnncost
