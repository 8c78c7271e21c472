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

#include <string>

#include "builders.hpp"
#include "net_builder.hpp"

namespace dnncost::zoo {
namespace {

struct GoogLeNetModule {
  const char* name;
  std::int64_t c1x1, r3x3, c3x3, r5x5, c5x5, proj;
};

std::string googlenet_module(NetBuilder& b, const std::string& in,
                             const GoogLeNetModule& m) {
  const std::string p = std::string("inception_") + m.name;
  const auto cr = [&](const std::string& n, const std::string& x,
                       Conv2dAttrs a) {
    return b.relu(p + "/relu_" + n, b.conv(p + "/" + n, x, a));
  };
  auto b1 = cr("1x1", in, conv(m.c1x1, 1));
  auto b2 = cr("3x3", cr("3x3_reduce", in, conv(m.r3x3, 1)),
               conv(m.c3x3, 3, 1, 1));
  auto b3 = cr("5x5", cr("5x5_reduce", in, conv(m.r5x5, 1)),
               conv(m.c5x5, 5, 1, 2));
  auto b4 = cr("pool_proj", b.pool(p + "/pool", in, max_pool(3, 1, 1, true)),
               conv(m.proj, 1));
  return b.concat(p + "/output", {b1, b2, b3, b4});
}

struct BnInceptionModule {
  const char* name;
  std::int64_t c1x1;  // 0: no 1x1 branch (reduction module)
  std::int64_t r3x3, c3x3, rd3x3, cd3x3;
  PoolKind pool;
  std::int64_t proj;  // 0: pooled branch passes through
  std::int64_t stride;
};

std::string bn_inception_module(NetBuilder& b, const std::string& in,
                                const BnInceptionModule& m) {
  const std::string p = std::string("inception_") + m.name;
  const auto cb = [&](const std::string& n, const std::string& x,
                       Conv2dAttrs a) {
    return b.conv_block(p + "/" + n, x, a, Norm::kFused);
  };
  std::vector<std::string> branches;
  if (m.c1x1 > 0) branches.push_back(cb("1x1", in, conv(m.c1x1, 1)));
  branches.push_back(cb("3x3", cb("3x3_reduce", in, conv(m.r3x3, 1)),
                        conv(m.c3x3, 3, m.stride, 1)));
  auto d = cb("double_3x3_reduce", in, conv(m.rd3x3, 1));
  d = cb("double_3x3_1", d, conv(m.cd3x3, 3, 1, 1));
  branches.push_back(cb("double_3x3_2", d, conv(m.cd3x3, 3, m.stride, 1)));
  // Reduction pools run in floor mode with padding so their output lines up
  // with the strided convolution branches.
  PoolAttrs pa = m.stride == 1 ? PoolAttrs{m.pool, {3, 3}, {1, 1}, {1, 1}, true}
                               : PoolAttrs{m.pool, {3, 3}, {2, 2}, {1, 1}, false};
  auto pooled = b.pool(p + "/pool", in, pa);
  branches.push_back(m.proj > 0 ? cb("pool_proj", pooled, conv(m.proj, 1))
                                : pooled);
  return b.concat(p + "/output", branches);
}

}  // namespace

Graph build_googlenet(const TensorShape& input) {
  static constexpr GoogLeNetModule k3[] = {
      {"3a", 64, 96, 128, 16, 32, 32}, {"3b", 128, 128, 192, 32, 96, 64}};
  static constexpr GoogLeNetModule k4[] = {
      {"4a", 192, 96, 208, 16, 48, 64},  {"4b", 160, 112, 224, 24, 64, 64},
      {"4c", 128, 128, 256, 24, 64, 64}, {"4d", 112, 144, 288, 32, 64, 64},
      {"4e", 256, 160, 320, 32, 128, 128}};
  static constexpr GoogLeNetModule k5[] = {
      {"5a", 256, 160, 320, 32, 128, 128}, {"5b", 384, 192, 384, 48, 128, 128}};

  NetBuilder b(input);
  auto x = b.relu("conv1/relu_7x7",
                  b.conv("conv1/7x7_s2", b.input_id(), conv(64, 7, 2, 3)));
  x = b.lrn("pool1/norm1", b.pool("pool1/3x3_s2", x, max_pool(3, 2, 0, true)));
  x = b.relu("conv2/relu_3x3_reduce",
             b.conv("conv2/3x3_reduce", x, conv(64, 1)));
  x = b.relu("conv2/relu_3x3", b.conv("conv2/3x3", x, conv(192, 3, 1, 1)));
  x = b.pool("pool2/3x3_s2", b.lrn("conv2/norm2", x), max_pool(3, 2, 0, true));
  for (const auto& m : k3) x = googlenet_module(b, x, m);
  x = b.pool("pool3/3x3_s2", x, max_pool(3, 2, 0, true));
  for (const auto& m : k4) x = googlenet_module(b, x, m);
  x = b.pool("pool4/3x3_s2", x, max_pool(3, 2, 0, true));
  for (const auto& m : k5) x = googlenet_module(b, x, m);
  x = b.dropout("pool5/drop_7x7_s1", b.global_pool("pool5/7x7_s1", x), 0.4);
  b.softmax("prob", b.fc("loss3/classifier", x, 1000));
  return std::move(b).finish();
}

Graph build_inception_v2(const TensorShape& input) {
  constexpr auto kAvg = PoolKind::kAvg;
  constexpr auto kMax = PoolKind::kMax;
  static constexpr BnInceptionModule kModules[] = {
      {"3a", 64, 64, 64, 64, 96, kAvg, 32, 1},
      {"3b", 64, 64, 96, 64, 96, kAvg, 64, 1},
      {"3c", 0, 128, 160, 64, 96, kMax, 0, 2},
      {"4a", 224, 64, 96, 96, 128, kAvg, 128, 1},
      {"4b", 192, 96, 128, 96, 128, kAvg, 128, 1},
      {"4c", 160, 128, 160, 128, 160, kAvg, 128, 1},
      {"4d", 96, 128, 192, 160, 192, kAvg, 128, 1},
      {"4e", 0, 128, 192, 192, 256, kMax, 0, 2},
      {"5a", 352, 192, 320, 160, 224, kAvg, 128, 1},
      {"5b", 352, 192, 320, 192, 224, kMax, 128, 1},
  };

  NetBuilder b(input);
  auto x = b.conv_block("conv1/7x7_s2", b.input_id(), conv(64, 7, 2, 3),
                        Norm::kFused);
  x = b.pool("pool1/3x3_s2", x, max_pool(3, 2, 0, true));
  x = b.conv_block("conv2/3x3_reduce", x, conv(64, 1), Norm::kFused);
  x = b.conv_block("conv2/3x3", x, conv(192, 3, 1, 1), Norm::kFused);
  x = b.pool("pool2/3x3_s2", x, max_pool(3, 2, 0, true));
  for (const auto& m : kModules) x = bn_inception_module(b, x, m);
  x = b.global_pool("pool5", x);
  b.softmax("prob", b.fc("fc", x, 1000));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
