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

#include <fmt/format.h>

#include "builders.hpp"
#include "net_builder.hpp"

namespace dnncost::zoo {
namespace {

constexpr std::int64_t kGrowth = 32;
constexpr std::int64_t kBottleneck = 4 * kGrowth;
constexpr std::array<int, 4> kBlockLayers{6, 12, 24, 16};

std::string bn_relu(NetBuilder& b, const std::string& name,
                    const std::string& in) {
  return b.relu(name + "/relu", b.norm(name, in, Norm::kCaffe));
}

}  // namespace

// Pre-activation dense layers (BN-ReLU-conv1x1-BN-ReLU-conv3x3), each
// concatenated onto the running block features; transitions halve the
// channels and pool 2x2.
Graph build_densenet121(const TensorShape& input) {
  NetBuilder b(input);
  auto x =
      b.conv_block("conv1", b.input_id(), conv(64, 7, 2, 3), Norm::kCaffe);
  x = b.pool("pool1", x, max_pool(3, 2, 1));
  for (std::size_t block = 0; block < kBlockLayers.size(); ++block) {
    for (int layer = 1; layer <= kBlockLayers[block]; ++layer) {
      const std::string p = fmt::format("conv{}_{}", block + 2, layer);
      auto y = bn_relu(b, p + "/x1", x);
      auto c1 = conv(kBottleneck, 1);
      c1.has_bias = false;
      y = b.conv(p + "/x1", y, c1);
      y = bn_relu(b, p + "/x2", y);
      auto c3 = conv(kGrowth, 3, 1, 1);
      c3.has_bias = false;
      y = b.conv(p + "/x2", y, c3);
      x = b.concat(fmt::format("concat_{}_{}", block + 2, layer), {x, y});
    }
    if (block + 1 < kBlockLayers.size()) {
      const std::string p = fmt::format("conv{}_blk", block + 2);
      auto y = bn_relu(b, p, x);
      auto ct = conv(b.channels(x) / 2, 1);
      ct.has_bias = false;
      y = b.conv(p, y, ct);
      x = b.pool(fmt::format("pool{}", block + 2), y, avg_pool(2, 2));
    }
  }
  x = bn_relu(b, "conv5_blk", x);
  x = b.global_pool("pool5", x);
  b.softmax("prob", b.fc("fc6", x, 1000));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
