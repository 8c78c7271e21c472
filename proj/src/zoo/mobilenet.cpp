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

#include <cmath>

#include <fmt/format.h>

#include "builders.hpp"
#include "net_builder.hpp"

namespace dnncost::zoo {

Graph build_mobilenet(const TensorShape& input, double alpha) {
  const auto width = [alpha](std::int64_t c) {
    return std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(c * alpha)));
  };
  // (pointwise output channels, depthwise stride)
  constexpr std::array<std::pair<std::int64_t, std::int64_t>, 13> kLayers{{
      {64, 1}, {128, 2}, {128, 1}, {256, 2}, {256, 1}, {512, 2}, {512, 1},
      {512, 1}, {512, 1}, {512, 1}, {512, 1}, {1024, 2}, {1024, 1}}};

  NetBuilder b(input);
  auto x =
      b.conv_block("conv1", b.input_id(), conv(width(32), 3, 2, 1), Norm::kCaffe);
  int index = 2;
  for (const auto& [out, stride] : kLayers) {
    const std::int64_t c = b.channels(x);
    x = b.conv_block(fmt::format("conv{}/dw", index), x, conv(c, 3, stride, 1, c),
                     Norm::kCaffe);
    x = b.conv_block(fmt::format("conv{}/pw", index), x, conv(width(out), 1),
                     Norm::kCaffe);
    ++index;
  }
  x = b.global_pool("pool6", x);
  b.softmax("prob", b.fc("fc7", x, 1000));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
