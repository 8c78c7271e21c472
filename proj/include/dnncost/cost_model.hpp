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
#include <string>
#include <vector>

#include "dnncost/graph.hpp"
#include "dnncost/shape_infer.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost {

/// Which node outputs count as activations.
enum class CountingConvention {
  kAllNodes,      // every node's output tensor, including Input
  kWeightedOnly,  // Conv2d and FullyConnected outputs only
};

std::string_view to_string(CountingConvention c);

struct CostOptions {
  CountingConvention convention = CountingConvention::kAllNodes;
  // Conv/FC bias terms are left out by default, matching N*M*S_F*S_F.
  bool include_bias = false;

  friend bool operator==(const CostOptions&, const CostOptions&) = default;
};

struct LayerCost {
  NodeIndex node = 0;
  std::string id;
  LayerKind kind = LayerKind::kInput;
  std::uint64_t params = 0;
  std::uint64_t activations = 0;
  std::uint64_t macs = 0;
};

struct CostTotals {
  std::uint64_t params = 0;
  std::uint64_t activations = 0;
  std::uint64_t macs = 0;

  friend bool operator==(const CostTotals&, const CostTotals&) = default;
};

struct ModelCost {
  std::vector<LayerCost> layers;  // topological order
  CostTotals totals;
  CostOptions options;
};

struct RatioMetrics {
  double acts_per_param = 0.0;  // also the nonlinearity measure
  double macs_per_param = 0.0;
  double macs_per_act = 0.0;
};

/// Conv2d: (N/g) * M * kh * kw (+ M with bias). FullyConnected: in * out
/// (+ out). BatchNorm: 2 * C when affine. Scale: C (+ C with bias). All other
/// kinds: 0.
std::uint64_t layer_params(const LayerSpec& spec, const TensorShape& input,
                           bool include_bias = false);

std::uint64_t layer_activations(
    const LayerSpec& spec, const TensorShape& output,
    CountingConvention convention = CountingConvention::kAllNodes);

/// Conv2d: (N/g) * M * out_h * out_w * kh * kw. FullyConnected: in * out.
/// One MAC is one multiply-accumulate; nothing is doubled into FLOPs.
std::uint64_t layer_macs(const LayerSpec& spec, const TensorShape& input,
                         const TensorShape& output);

ModelCost model_cost(const Graph& graph, const ShapeAnnotation& shapes,
                     const CostOptions& options = {});
ModelCost model_cost(const Graph& graph, const ShapeAnnotation& shapes,
                     const std::vector<NodeIndex>& order,
                     const CostOptions& options = {});

/// Throws Error{kZeroDenominator} if params or activations is zero.
RatioMetrics derived_ratios(const CostTotals& totals);

struct MetricDelta {
  double original = 0.0;
  double replacement = 0.0;
  double absolute = 0.0;  // replacement - original
  double percent = 0.0;   // 100 * absolute / original
};

struct FactorizationReport {
  TensorShape input;
  TensorShape output;
  std::vector<TensorShape> replacement_outputs;
  MetricDelta params;
  MetricDelta activations;  // replacement sums every intermediate output
  MetricDelta macs;
  MetricDelta macs_per_param;
  MetricDelta macs_per_act;
};

/// Compares one convolution against a chain of convolutions applied in
/// sequence to the same input. Throws Error{kShapeMismatch} when the chain
/// does not end on the original's output shape.
FactorizationReport factorization_compare(const Conv2dAttrs& original,
                                          std::span<const Conv2dAttrs> chain,
                                          const TensorShape& input,
                                          bool include_bias = false);

}  // namespace dnncost
