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

#include "dnncost/shape_infer.hpp"

#include <fmt/format.h>

#include "dnncost/error.hpp"

namespace dnncost {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::kShapeInference, message);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0; a may be negative.
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -ceil_div(-a, b);
}

TensorShape windowed(const TensorShape& in, std::int64_t channels,
                     Extent2 kernel, Extent2 stride, Extent2 pad,
                     bool ceil_mode) {
  const TensorShape out{
      channels,
      window_output_extent(in.height, kernel.h, stride.h, pad.h, ceil_mode),
      window_output_extent(in.width, kernel.w, stride.w, pad.w, ceil_mode)};
  if (!out.valid()) {
    fail(fmt::format("non-positive output dimension ({}, {}, {})",
                     out.channels, out.height, out.width));
  }
  return out;
}

}  // namespace

std::int64_t window_output_extent(std::int64_t in, std::int64_t kernel,
                                  std::int64_t stride, std::int64_t pad,
                                  bool ceil_mode) {
  const std::int64_t span = in + 2 * pad - kernel;
  if (!ceil_mode) return floor_div(span, stride) + 1;
  std::int64_t out = ceil_div(span, stride) + 1;
  if (pad > 0 && (out - 1) * stride >= in + pad) --out;
  return out;
}

TensorShape infer_node(const LayerSpec& spec,
                       std::span<const TensorShape> inputs) {
  const LayerKind kind = spec.kind();
  if (kind == LayerKind::kInput) {
    fail("Input nodes take their shape from the network input");
  }
  if (inputs.empty()) fail("node has no input shapes");
  const TensorShape& in = inputs.front();

  switch (kind) {
    case LayerKind::kConv2d: {
      const auto& c = spec.as<Conv2dAttrs>();
      if (c.groups < 1 || in.channels % c.groups != 0) {
        fail(fmt::format("groups {} do not divide input channels {}", c.groups,
                         in.channels));
      }
      if (c.out_channels % c.groups != 0) {
        fail(fmt::format("groups {} do not divide output channels {}",
                         c.groups, c.out_channels));
      }
      return windowed(in, c.out_channels, c.kernel, c.stride, c.padding,
                      false);
    }
    case LayerKind::kPool: {
      const auto& p = spec.as<PoolAttrs>();
      return windowed(in, in.channels, p.kernel, p.stride, p.padding,
                      p.ceil_mode);
    }
    case LayerKind::kFullyConnected:
      return {spec.as<FullyConnectedAttrs>().out_features, 1, 1};
    case LayerKind::kGlobalPool:
      return {in.channels, 1, 1};
    case LayerKind::kConcat: {
      TensorShape out = in;
      for (std::size_t k = 1; k < inputs.size(); ++k) {
        if (inputs[k].height != in.height || inputs[k].width != in.width) {
          fail(fmt::format("concat spatial mismatch {}x{} vs {}x{}",
                           in.height, in.width, inputs[k].height,
                           inputs[k].width));
        }
        out.channels += inputs[k].channels;
      }
      return out;
    }
    case LayerKind::kAdd:
      for (std::size_t k = 1; k < inputs.size(); ++k) {
        if (inputs[k] != in) {
          fail(fmt::format("add shape mismatch ({}, {}, {}) vs ({}, {}, {})",
                           in.channels, in.height, in.width,
                           inputs[k].channels, inputs[k].height,
                           inputs[k].width));
        }
      }
      return in;
    case LayerKind::kActivation:
    case LayerKind::kBatchNorm:
    case LayerKind::kScale:
    case LayerKind::kLrn:
    case LayerKind::kDropout:
    case LayerKind::kSoftmax:
      return in;
    case LayerKind::kInput:
      break;
  }
  fail("unhandled layer kind");
}

ShapeAnnotation infer_graph(const Graph& graph, const TensorShape& input) {
  return infer_graph(graph, input, topological_order(graph));
}

ShapeAnnotation infer_graph(const Graph& graph, const TensorShape& input,
                            const std::vector<NodeIndex>& order) {
  if (!input.valid()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("invalid input shape ({}, {}, {})", input.channels,
                            input.height, input.width));
  }
  if (!is_topological_order(graph, order)) {
    throw Error(ErrorCode::kInvalidArgument,
                "order is not a topological order of the graph");
  }
  std::vector<TensorShape> shapes(graph.size());
  std::vector<TensorShape> scratch;
  for (NodeIndex i : order) {
    const LayerSpec& spec = graph.node(i);
    if (spec.kind() == LayerKind::kInput) {
      shapes[i] = input;
      continue;
    }
    scratch.clear();
    for (NodeIndex p : graph.producers(i)) scratch.push_back(shapes[p]);
    try {
      shapes[i] = infer_node(spec, scratch);
    } catch (const Error& e) {
      throw Error(e.code(),
                  fmt::format("node '{}': {}", spec.id(), e.what()));
    }
  }
  return ShapeAnnotation(std::move(shapes));
}

}  // namespace dnncost
