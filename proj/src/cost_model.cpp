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

#include "dnncost/cost_model.hpp"

#include <fmt/format.h>

#include "dnncost/error.hpp"

namespace dnncost {

std::string_view to_string(CountingConvention c) {
  return c == CountingConvention::kAllNodes ? "all-nodes" : "weighted-only";
}

std::uint64_t layer_params(const LayerSpec& spec, const TensorShape& input,
                           bool include_bias) {
  if (!input.valid()) {
    throw Error(ErrorCode::kShapeInference,
                fmt::format("node '{}': unresolved input shape", spec.id()));
  }
  const auto channels = static_cast<std::uint64_t>(input.channels);
  switch (spec.kind()) {
    case LayerKind::kConv2d: {
      const auto& c = spec.as<Conv2dAttrs>();
      const auto m = static_cast<std::uint64_t>(c.out_channels);
      const std::uint64_t weights =
          channels / static_cast<std::uint64_t>(c.groups) * m *
          static_cast<std::uint64_t>(c.kernel.h * c.kernel.w);
      return weights + (include_bias && c.has_bias ? m : 0);
    }
    case LayerKind::kFullyConnected: {
      const auto& f = spec.as<FullyConnectedAttrs>();
      const auto m = static_cast<std::uint64_t>(f.out_features);
      return input.element_count() * m + (include_bias && f.has_bias ? m : 0);
    }
    case LayerKind::kBatchNorm:
      return spec.as<BatchNormAttrs>().affine ? 2 * channels : 0;
    case LayerKind::kScale:
      return spec.as<ScaleAttrs>().has_bias ? 2 * channels : channels;
    default:
      return 0;
  }
}

std::uint64_t layer_activations(const LayerSpec& spec,
                                const TensorShape& output,
                                CountingConvention convention) {
  if (!output.valid()) {
    throw Error(ErrorCode::kShapeInference,
                fmt::format("node '{}': unresolved output shape", spec.id()));
  }
  if (convention == CountingConvention::kWeightedOnly &&
      !is_weighted(spec.kind())) {
    return 0;
  }
  return output.element_count();
}

std::uint64_t layer_macs(const LayerSpec& spec, const TensorShape& input,
                         const TensorShape& output) {
  if (!input.valid() || !output.valid()) {
    throw Error(ErrorCode::kShapeInference,
                fmt::format("node '{}': unresolved shapes", spec.id()));
  }
  switch (spec.kind()) {
    case LayerKind::kConv2d: {
      const auto& c = spec.as<Conv2dAttrs>();
      return static_cast<std::uint64_t>(input.channels / c.groups) *
             output.element_count() *
             static_cast<std::uint64_t>(c.kernel.h * c.kernel.w);
    }
    case LayerKind::kFullyConnected:
      return input.element_count() *
             static_cast<std::uint64_t>(
                 spec.as<FullyConnectedAttrs>().out_features);
    default:
      return 0;
  }
}

ModelCost model_cost(const Graph& graph, const ShapeAnnotation& shapes,
                     const CostOptions& options) {
  return model_cost(graph, shapes, topological_order(graph), options);
}

ModelCost model_cost(const Graph& graph, const ShapeAnnotation& shapes,
                     const std::vector<NodeIndex>& order,
                     const CostOptions& options) {
  if (shapes.size() != graph.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "shape annotation does not match graph");
  }
  ModelCost cost;
  cost.options = options;
  cost.layers.reserve(order.size());
  for (NodeIndex i : order) {
    const LayerSpec& spec = graph.node(i);
    const TensorShape& out = shapes[i];
    // Weighted kinds are unary, so the first producer is the operand.
    const TensorShape& in =
        graph.producers(i).empty() ? out : shapes[graph.producers(i).front()];
    LayerCost lc{i, spec.id(), spec.kind(),
                 layer_params(spec, in, options.include_bias),
                 layer_activations(spec, out, options.convention),
                 layer_macs(spec, in, out)};
    cost.totals.params += lc.params;
    cost.totals.activations += lc.activations;
    cost.totals.macs += lc.macs;
    cost.layers.push_back(std::move(lc));
  }
  return cost;
}

RatioMetrics derived_ratios(const CostTotals& totals) {
  if (totals.params == 0) {
    throw Error(ErrorCode::kZeroDenominator, "model has zero parameters");
  }
  if (totals.activations == 0) {
    throw Error(ErrorCode::kZeroDenominator, "model has zero activations");
  }
  const auto p = static_cast<double>(totals.params);
  const auto a = static_cast<double>(totals.activations);
  const auto m = static_cast<double>(totals.macs);
  return {a / p, m / p, m / a};
}

namespace {

MetricDelta delta(double original, double replacement) {
  MetricDelta d{original, replacement, replacement - original, 0.0};
  if (original != 0.0) {
    d.percent = 100.0 * d.absolute / original;
  } else if (replacement != 0.0) {
    throw Error(ErrorCode::kZeroDenominator,
                "original metric is zero; percentage undefined");
  }
  return d;
}

}  // namespace

FactorizationReport factorization_compare(const Conv2dAttrs& original,
                                          std::span<const Conv2dAttrs> chain,
                                          const TensorShape& input,
                                          bool include_bias) {
  if (chain.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "replacement chain is empty");
  }
  FactorizationReport report;
  report.input = input;

  const LayerSpec orig_spec("original", original);
  const TensorShape orig_out = infer_node(orig_spec, {&input, 1});
  report.output = orig_out;
  const double orig_params =
      static_cast<double>(layer_params(orig_spec, input, include_bias));
  const double orig_acts = static_cast<double>(orig_out.element_count());
  const double orig_macs =
      static_cast<double>(layer_macs(orig_spec, input, orig_out));

  std::uint64_t params = 0, acts = 0, macs = 0;
  TensorShape cur = input;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const LayerSpec spec(fmt::format("replacement{}", k), chain[k]);
    const TensorShape out = infer_node(spec, {&cur, 1});
    params += layer_params(spec, cur, include_bias);
    acts += out.element_count();
    macs += layer_macs(spec, cur, out);
    report.replacement_outputs.push_back(out);
    cur = out;
  }
  if (cur != orig_out) {
    throw Error(ErrorCode::kShapeMismatch,
                fmt::format("replacement output ({}, {}, {}) does not match "
                            "original output ({}, {}, {})",
                            cur.channels, cur.height, cur.width,
                            orig_out.channels, orig_out.height,
                            orig_out.width));
  }
  const auto p = static_cast<double>(params);
  const auto a = static_cast<double>(acts);
  const auto m = static_cast<double>(macs);
  report.params = delta(orig_params, p);
  report.activations = delta(orig_acts, a);
  report.macs = delta(orig_macs, m);
  report.macs_per_param = delta(orig_macs / orig_params, m / p);
  report.macs_per_act = delta(orig_macs / orig_acts, m / a);
  return report;
}

}  // namespace dnncost
