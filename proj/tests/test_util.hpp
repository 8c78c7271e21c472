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

namespace dnncost::testing {

inline LayerSpec input(std::string id = "in") {
  return LayerSpec(std::move(id), InputAttrs{});
}

inline LayerSpec conv(std::string id, std::int64_t out, std::int64_t k,
                      std::int64_t stride = 1, std::int64_t pad = 0,
                      std::int64_t groups = 1) {
  Conv2dAttrs a;
  a.out_channels = out;
  a.kernel = {k, k};
  a.stride = {stride, stride};
  a.padding = {pad, pad};
  a.groups = groups;
  return LayerSpec(std::move(id), a);
}

inline LayerSpec relu(std::string id) {
  return LayerSpec(std::move(id), ActivationAttrs{});
}

inline LayerSpec add(std::string id) { return LayerSpec(std::move(id), AddAttrs{}); }

inline LayerSpec concat(std::string id) {
  return LayerSpec(std::move(id), ConcatAttrs{});
}

/// Appends spec and wires it to the given producers.
inline NodeIndex append(Graph& g, LayerSpec spec,
                        const std::vector<std::string>& inputs) {
  const std::string id = spec.id();
  const NodeIndex i = g.add_node(std::move(spec));
  for (const auto& p : inputs) g.connect(p, id);
  return i;
}

}  // namespace dnncost::testing
