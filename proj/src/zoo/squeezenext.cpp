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
namespace {

// Constants not fixed by the published block description, taken from the
// reference SqueezeNext deployment:
//   - stem: 64 filters, 7x7/2 (5x5/2 for the v5 variants), not width-scaled;
//   - 3x3/2 ceil-mode max pool after the stem;
//   - group output widths 32, 64, 128, 256 (times width), the first block of
//     groups 2-4 strides by 2;
//   - block bottleneck factor r = 1 on strided blocks, 1/4 when the block
//     narrows its input, 1/2 otherwise; the 1x1 stages produce C*r and C*r/2;
//   - projection shortcut (1x1, no ReLU) whenever channels or stride change;
//   - 1x1 bottleneck of 128*width before global pooling and the classifier.
// The grouped ("G") variant uses 4 groups on the 1x3 and 3x1 convolutions.
constexpr std::int64_t kStemFilters = 64;
constexpr std::array<std::int64_t, 4> kGroupWidths{32, 64, 128, 256};
constexpr std::int64_t kHeadWidth = 128;
constexpr std::int64_t kSeparableGroups = 4;

std::int64_t scaled(std::int64_t channels, double width) {
  return std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(channels * width)));
}

std::string block(NetBuilder& b, const std::string& in, const std::string& name,
                  std::int64_t out, std::int64_t stride, bool grouped) {
  const std::int64_t c = b.channels(in);
  const double r = stride == 2 ? 1.0 : (c > out ? 0.25 : 0.5);
  const auto r1 = std::max<std::int64_t>(1, static_cast<std::int64_t>(c * r));
  const auto r2 = std::max<std::int64_t>(1, r1 / 2);
  const std::int64_t g =
      grouped && r1 % kSeparableGroups == 0 && r2 % kSeparableGroups == 0
          ? kSeparableGroups
          : 1;

  auto y = b.conv_block(name + "/reduce1", in, conv(r1, 1, stride), Norm::kCaffe);
  y = b.conv_block(name + "/reduce2", y, conv(r2, 1), Norm::kCaffe);
  y = b.conv_block(name + "/conv1x3", y, conv(r1, {1, 3}, {0, 1}, 1, g),
                   Norm::kCaffe);
  y = b.conv_block(name + "/conv3x1", y, conv(r1, {3, 1}, {1, 0}, 1, g),
                   Norm::kCaffe);
  y = b.conv_block(name + "/expand", y, conv(out, 1), Norm::kCaffe);

  std::string shortcut = in;
  if (stride != 1 || c != out) {
    shortcut = b.conv_block(name + "/shortcut", in, conv(out, 1, stride),
                            Norm::kCaffe, false);
  }
  return b.relu(name + "/relu", b.add_op(name + "/add", {y, shortcut}));
}

}  // namespace

Graph build_squeezenext(const TensorShape& input,
                        const SqueezeNextConfig& cfg) {
  NetBuilder b(input);
  auto x = b.conv_block("conv1", b.input_id(),
                        conv(kStemFilters, cfg.stem_kernel, 2), Norm::kCaffe);
  x = b.pool("pool1", x, max_pool(3, 2, 0, true));
  for (std::size_t group = 0; group < cfg.blocks.size(); ++group) {
    const std::int64_t out = scaled(kGroupWidths[group], cfg.width);
    for (int k = 0; k < cfg.blocks[group]; ++k) {
      const std::int64_t stride = (group > 0 && k == 0) ? 2 : 1;
      x = block(b, x, fmt::format("stage{}/block{}", group + 1, k + 1), out,
                stride, cfg.grouped);
    }
  }
  x = b.conv_block("conv_head", x, conv(scaled(kHeadWidth, cfg.width), 1),
                   Norm::kCaffe);
  x = b.global_pool("pool_head", x);
  b.softmax("prob", b.fc("fc", x, 1000));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
