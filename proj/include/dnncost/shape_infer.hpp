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

#include <span>
#include <vector>

#include "dnncost/graph.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost {

/// Output shape of every node, indexed by NodeIndex.
class ShapeAnnotation {
 public:
  explicit ShapeAnnotation(std::vector<TensorShape> shapes)
      : shapes_(std::move(shapes)) {}

  const TensorShape& operator[](NodeIndex i) const { return shapes_.at(i); }
  const TensorShape& at(const Graph& g, std::string_view id) const {
    return shapes_.at(g.index_of(id));
  }
  std::size_t size() const { return shapes_.size(); }
  const std::vector<TensorShape>& shapes() const { return shapes_; }

  friend bool operator==(const ShapeAnnotation&,
                         const ShapeAnnotation&) = default;

 private:
  std::vector<TensorShape> shapes_;
};

/// floor((in + 2*pad - kernel) / stride) + 1, or the Caffe ceil variant
/// (which also drops a trailing window that would start inside the padding).
/// Returns a non-positive value when the window does not fit.
std::int64_t window_output_extent(std::int64_t in, std::int64_t kernel,
                                  std::int64_t stride, std::int64_t pad,
                                  bool ceil_mode);

/// Throws Error{kShapeInference} on a non-positive dimension, channel
/// mismatch, or a group count that does not divide the channels.
TensorShape infer_node(const LayerSpec& spec,
                       std::span<const TensorShape> inputs);

/// Propagates shapes in topological order. Errors name the failing node.
/// The graph must validate.
ShapeAnnotation infer_graph(const Graph& graph, const TensorShape& input);

/// Same as above, using a caller-chosen topological order.
ShapeAnnotation infer_graph(const Graph& graph, const TensorShape& input,
                            const std::vector<NodeIndex>& order);

}  // namespace dnncost
