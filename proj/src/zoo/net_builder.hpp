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

#include <string>
#include <vector>

#include "dnncost/graph.hpp"
#include "dnncost/layer.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost::zoo {

Conv2dAttrs conv(std::int64_t out, std::int64_t kernel, std::int64_t stride = 1,
                 std::int64_t pad = 0, std::int64_t groups = 1);
Conv2dAttrs conv(std::int64_t out, Extent2 kernel, Extent2 pad,
                 std::int64_t stride = 1, std::int64_t groups = 1);
PoolAttrs max_pool(std::int64_t kernel, std::int64_t stride,
                   std::int64_t pad = 0, bool ceil_mode = false);
PoolAttrs avg_pool(std::int64_t kernel, std::int64_t stride,
                   std::int64_t pad = 0, bool ceil_mode = false);

/// How a convolution's normalization is materialized.
enum class Norm {
  kNone,
  kFused,  // one BatchNorm node with learned scale/shift
  kCaffe,  // stats-only BatchNorm followed by a Scale node
};

/// Appends nodes while tracking shapes, so builders can size later layers
/// (depthwise groups, transition widths) from what they already built.
class NetBuilder {
 public:
  NetBuilder(TensorShape input, std::string input_id = "data");

  std::string add(LayerSpec spec, const std::vector<std::string>& inputs);

  std::string conv(const std::string& name, const std::string& in,
                   Conv2dAttrs attrs);
  std::string relu(const std::string& name, const std::string& in);
  std::string pool(const std::string& name, const std::string& in,
                   PoolAttrs attrs);
  std::string global_pool(const std::string& name, const std::string& in);
  std::string lrn(const std::string& name, const std::string& in);
  std::string dropout(const std::string& name, const std::string& in,
                      double ratio = 0.5);
  std::string fc(const std::string& name, const std::string& in,
                 std::int64_t out);
  std::string softmax(const std::string& name, const std::string& in);
  std::string concat(const std::string& name,
                     const std::vector<std::string>& inputs);
  std::string add_op(const std::string& name,
                     const std::vector<std::string>& inputs);
  std::string norm(const std::string& name, const std::string& in, Norm style);

  /// conv -> norm -> (ReLU). Returns the last node id.
  std::string conv_block(const std::string& name, const std::string& in,
                         Conv2dAttrs attrs, Norm style, bool relu = true);

  const TensorShape& shape(const std::string& id) const;
  std::int64_t channels(const std::string& id) const {
    return shape(id).channels;
  }
  const std::string& input_id() const { return input_id_; }
  const TensorShape& input_shape() const { return input_; }

  Graph finish() &&;

 private:
  Graph graph_;
  std::vector<TensorShape> shapes_;
  TensorShape input_;
  std::string input_id_;
};

}  // namespace dnncost::zoo
