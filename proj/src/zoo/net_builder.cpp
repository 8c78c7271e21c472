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

#include "net_builder.hpp"

#include "dnncost/shape_infer.hpp"

namespace dnncost::zoo {

Conv2dAttrs conv(std::int64_t out, std::int64_t kernel, std::int64_t stride,
                 std::int64_t pad, std::int64_t groups) {
  Conv2dAttrs c;
  c.out_channels = out;
  c.kernel = {kernel, kernel};
  c.stride = {stride, stride};
  c.padding = {pad, pad};
  c.groups = groups;
  c.has_bias = true;
  return c;
}

Conv2dAttrs conv(std::int64_t out, Extent2 kernel, Extent2 pad,
                 std::int64_t stride, std::int64_t groups) {
  Conv2dAttrs c;
  c.out_channels = out;
  c.kernel = kernel;
  c.stride = {stride, stride};
  c.padding = pad;
  c.groups = groups;
  c.has_bias = true;
  return c;
}

PoolAttrs max_pool(std::int64_t kernel, std::int64_t stride, std::int64_t pad,
                   bool ceil_mode) {
  return {PoolKind::kMax, {kernel, kernel}, {stride, stride}, {pad, pad},
          ceil_mode};
}

PoolAttrs avg_pool(std::int64_t kernel, std::int64_t stride, std::int64_t pad,
                   bool ceil_mode) {
  return {PoolKind::kAvg, {kernel, kernel}, {stride, stride}, {pad, pad},
          ceil_mode};
}

NetBuilder::NetBuilder(TensorShape input, std::string input_id)
    : input_(input), input_id_(std::move(input_id)) {
  graph_.add_node(LayerSpec(input_id_, InputAttrs{}));
  shapes_.push_back(input_);
}

std::string NetBuilder::add(LayerSpec spec,
                            const std::vector<std::string>& inputs) {
  std::vector<TensorShape> in_shapes;
  in_shapes.reserve(inputs.size());
  for (const auto& id : inputs) in_shapes.push_back(shape(id));
  const TensorShape out = infer_node(spec, in_shapes);
  std::string id = spec.id();
  graph_.add_node(std::move(spec));
  for (const auto& in : inputs) graph_.connect(in, id);
  shapes_.push_back(out);
  return id;
}

std::string NetBuilder::conv(const std::string& name, const std::string& in,
                             Conv2dAttrs attrs) {
  return add(LayerSpec(name, attrs), {in});
}

std::string NetBuilder::relu(const std::string& name, const std::string& in) {
  return add(LayerSpec(name, ActivationAttrs{}), {in});
}

std::string NetBuilder::pool(const std::string& name, const std::string& in,
                             PoolAttrs attrs) {
  return add(LayerSpec(name, attrs), {in});
}

std::string NetBuilder::global_pool(const std::string& name,
                                    const std::string& in) {
  return add(LayerSpec(name, GlobalPoolAttrs{}), {in});
}

std::string NetBuilder::lrn(const std::string& name, const std::string& in) {
  return add(LayerSpec(name, LrnAttrs{}), {in});
}

std::string NetBuilder::dropout(const std::string& name, const std::string& in,
                                double ratio) {
  return add(LayerSpec(name, DropoutAttrs{ratio}), {in});
}

std::string NetBuilder::fc(const std::string& name, const std::string& in,
                           std::int64_t out) {
  return add(LayerSpec(name, FullyConnectedAttrs{out, true}), {in});
}

std::string NetBuilder::softmax(const std::string& name,
                                const std::string& in) {
  return add(LayerSpec(name, SoftmaxAttrs{}), {in});
}

std::string NetBuilder::concat(const std::string& name,
                               const std::vector<std::string>& inputs) {
  return add(LayerSpec(name, ConcatAttrs{}), inputs);
}

std::string NetBuilder::add_op(const std::string& name,
                               const std::vector<std::string>& inputs) {
  return add(LayerSpec(name, AddAttrs{}), inputs);
}

std::string NetBuilder::norm(const std::string& name, const std::string& in,
                             Norm style) {
  switch (style) {
    case Norm::kNone:
      return in;
    case Norm::kFused:
      return add(LayerSpec(name + "/bn", BatchNormAttrs{true}), {in});
    case Norm::kCaffe: {
      const auto bn = add(LayerSpec(name + "/bn", BatchNormAttrs{false}), {in});
      return add(LayerSpec(name + "/scale", ScaleAttrs{true}), {bn});
    }
  }
  return in;
}

std::string NetBuilder::conv_block(const std::string& name,
                                   const std::string& in, Conv2dAttrs attrs,
                                   Norm style, bool with_relu) {
  if (style != Norm::kNone) attrs.has_bias = false;
  auto out = norm(name, conv(name, in, attrs), style);
  if (with_relu) out = relu(name + "/relu", out);
  return out;
}

const TensorShape& NetBuilder::shape(const std::string& id) const {
  return shapes_.at(graph_.index_of(id));
}

Graph NetBuilder::finish() && { return std::move(graph_); }

}  // namespace dnncost::zoo
