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

#include <array>

#include "dnncost/graph.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost::zoo {

Graph build_alexnet(const TensorShape& input);

enum class SqueezeNetVersion { kV10, kV11 };
Graph build_squeezenet(const TensorShape& input, SqueezeNetVersion version);

struct SqueezeNextConfig {
  double width = 1.0;
  std::array<int, 4> blocks{6, 6, 8, 1};
  bool grouped = false;
  std::int64_t stem_kernel = 7;
};
Graph build_squeezenext(const TensorShape& input, const SqueezeNextConfig& cfg);

Graph build_mobilenet(const TensorShape& input, double alpha);
Graph build_densenet121(const TensorShape& input);
Graph build_googlenet(const TensorShape& input);
Graph build_inception_v2(const TensorShape& input);

}  // namespace dnncost::zoo
