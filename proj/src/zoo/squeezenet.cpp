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

// squeeze 1x1 -> {expand 1x1, expand 3x3} -> concat
std::string fire(NetBuilder& b, const std::string& in, int index,
                 std::int64_t squeeze, std::int64_t expand) {
  const std::string p = fmt::format("fire{}", index);
  const auto s = b.relu(p + "/relu_squeeze1x1",
                        b.conv(p + "/squeeze1x1", in, conv(squeeze, 1)));
  const auto e1 = b.relu(p + "/relu_expand1x1",
                         b.conv(p + "/expand1x1", s, conv(expand, 1)));
  const auto e3 = b.relu(p + "/relu_expand3x3",
                         b.conv(p + "/expand3x3", s, conv(expand, 3, 1, 1)));
  return b.concat(p + "/concat", {e1, e3});
}

}  // namespace

Graph build_squeezenet(const TensorShape& input, SqueezeNetVersion version) {
  NetBuilder b(input);
  std::string x;
  const PoolAttrs pool = max_pool(3, 2, 0, true);
  if (version == SqueezeNetVersion::kV10) {
    x = b.relu("relu_conv1", b.conv("conv1", b.input_id(), conv(96, 7, 2)));
    x = b.pool("pool1", x, pool);
    x = fire(b, x, 2, 16, 64);
    x = fire(b, x, 3, 16, 64);
    x = fire(b, x, 4, 32, 128);
    x = b.pool("pool4", x, pool);
    x = fire(b, x, 5, 32, 128);
    x = fire(b, x, 6, 48, 192);
    x = fire(b, x, 7, 48, 192);
    x = fire(b, x, 8, 64, 256);
    x = b.pool("pool8", x, pool);
    x = fire(b, x, 9, 64, 256);
  } else {
    // V1.1: 3x3/64 stem and pooling moved earlier.
    x = b.relu("relu_conv1", b.conv("conv1", b.input_id(), conv(64, 3, 2)));
    x = b.pool("pool1", x, pool);
    x = fire(b, x, 2, 16, 64);
    x = fire(b, x, 3, 16, 64);
    x = b.pool("pool3", x, pool);
    x = fire(b, x, 4, 32, 128);
    x = fire(b, x, 5, 32, 128);
    x = b.pool("pool5", x, pool);
    x = fire(b, x, 6, 48, 192);
    x = fire(b, x, 7, 48, 192);
    x = fire(b, x, 8, 64, 256);
    x = fire(b, x, 9, 64, 256);
  }
  x = b.dropout("drop9", x);
  x = b.relu("relu_conv10", b.conv("conv10", x, conv(1000, 1)));
  b.softmax("prob", b.global_pool("pool10", x));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
