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

#include "dnncost/shape_infer.hpp"


#include <gtest/gtest.h>

#include "dnncost/error.hpp"
#include "dnncost/zoo.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace dnncost {
namespace {

using testing::append;

TensorShape infer1(const LayerSpec& spec, const TensorShape& in) {
  const TensorShape inputs[] = {in};
  return infer_node(spec, inputs);
}

TEST(ShapeInferTest, Conv3x3Valid) {
  EXPECT_EQ(infer1(testing::conv("c", 64, 3), {3, 224, 224}),
            (TensorShape{64, 222, 222}));
}

TEST(ShapeInferTest, Conv1x1KeepsSpatial) {
  EXPECT_EQ(infer1(testing::conv("c", 17, 1), {5, 13, 29}),
            (TensorShape{17, 13, 29}));
}

TEST(ShapeInferTest, AlexNetConv1) {
  EXPECT_EQ(infer1(testing::conv("c", 96, 11, 4), {3, 227, 227}),
            (TensorShape{96, 55, 55}));
}

TEST(ShapeInferTest, AsymmetricAndRectangular) {
  Conv2dAttrs a;
  a.out_channels = 8;
  a.kernel = {1, 3};
  a.padding = {0, 1};
  EXPECT_EQ(infer1(LayerSpec("c", a), {4, 10, 20}), (TensorShape{8, 10, 20}));
  a.kernel = {3, 1};
  a.padding = {0, 0};
  a.stride = {2, 1};
  EXPECT_EQ(infer1(LayerSpec("c", a), {4, 11, 20}), (TensorShape{8, 5, 20}));
}

TEST(ShapeInferTest, PassThroughKinds) {
  const TensorShape s{7, 9, 11};
  EXPECT_EQ(infer1(testing::relu("r"), s), s);
  EXPECT_EQ(infer1(LayerSpec("b", BatchNormAttrs{}), s), s);
  EXPECT_EQ(infer1(LayerSpec("b", ScaleAttrs{}), s), s);
  EXPECT_EQ(infer1(LayerSpec("l", LrnAttrs{}), s), s);
  EXPECT_EQ(infer1(LayerSpec("d", DropoutAttrs{}), s), s);
  EXPECT_EQ(infer1(LayerSpec("s", SoftmaxAttrs{}), s), s);
  EXPECT_EQ(infer1(LayerSpec("g", GlobalPoolAttrs{}), s), (TensorShape{7, 1, 1}));
  EXPECT_EQ(infer1(LayerSpec("f", FullyConnectedAttrs{10, false}), s),
            (TensorShape{10, 1, 1}));
}

TEST(ShapeInferTest, AddAndConcat) {
  const TensorShape a{64, 55, 55};
  const TensorShape two[] = {a, a};
  EXPECT_EQ(infer_node(testing::add("s"), two), a);
  const TensorShape mixed[] = {{64, 28, 28}, {32, 28, 28}};
  EXPECT_EQ(infer_node(testing::concat("c"), mixed), (TensorShape{96, 28, 28}));
}

TEST(ShapeInferTest, Errors) {
  const auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code([] { infer1(testing::conv("c", 4, 7), {1, 5, 5}); }),
            ErrorCode::kShapeInference);
  EXPECT_EQ(code([] { infer1(testing::conv("c", 4, 3, 1, 0, 2), {3, 9, 9}); }),
            ErrorCode::kShapeInference);
  EXPECT_EQ(code([] { infer1(testing::conv("c", 3, 3, 1, 0, 2), {4, 9, 9}); }),
            ErrorCode::kShapeInference);
  const TensorShape bad_add[] = {{64, 5, 5}, {32, 5, 5}};
  EXPECT_EQ(code([&] { infer_node(testing::add("s"), bad_add); }),
            ErrorCode::kShapeInference);
  const TensorShape bad_cat[] = {{64, 5, 5}, {32, 4, 5}};
  EXPECT_EQ(code([&] { infer_node(testing::concat("c"), bad_cat); }),
            ErrorCode::kShapeInference);
}

TEST(ShapeInferTest, GraphErrorNamesNode) {
  Graph g;
  g.add_node(testing::input());
  append(g, testing::conv("too_big", 4, 9), {"in"});
  try {
    infer_graph(g, {1, 5, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeInference);
    EXPECT_NE(std::string(e.what()).find("too_big"), std::string::npos);
  }
}

TEST(ShapeInferTest, FactorizedChain) {
  Graph g;
  g.add_node(testing::input());
  append(g, testing::conv("c5", 1, 5), {"in"});
  append(g, testing::conv("a3", 1, 3), {"in"});
  append(g, testing::conv("b3", 1, 3), {"a3"});
  const auto s = infer_graph(g, {1, 224, 224});
  EXPECT_EQ(s.at(g, "c5"), (TensorShape{1, 220, 220}));
  EXPECT_EQ(s.at(g, "a3"), (TensorShape{1, 222, 222}));
  EXPECT_EQ(s.at(g, "b3"), (TensorShape{1, 220, 220}));
  EXPECT_EQ(s.at(g, "in"), (TensorShape{1, 224, 224}));
  EXPECT_EQ(s.size(), g.size());
}

TEST(ShapeInferTest, FiveByFiveMatchesTwoThreeByThreeForAllSizes) {
  for (std::int64_t n = 5; n <= 512; ++n) {
    const auto one = window_output_extent(n, 5, 1, 0, false);
    const auto two =
        window_output_extent(window_output_extent(n, 3, 1, 0, false), 3, 1, 0,
                             false);
    ASSERT_EQ(one, two) << n;
  }
}

TEST(ShapeInferTest, OneByThreeThenThreeByOneShrinksLikeThreeByThree) {
  Conv2dAttrs h;
  h.kernel = {1, 3};
  Conv2dAttrs v;
  v.kernel = {3, 1};
  Conv2dAttrs sq;
  sq.kernel = {3, 3};
  for (std::int64_t hh = 3; hh <= 40; ++hh) {
    for (std::int64_t ww = 3; ww <= 40; ww += 7) {
      const TensorShape in{1, hh, ww};
      const auto mid = infer1(LayerSpec("h", h), in);
      EXPECT_EQ(infer1(LayerSpec("v", v), mid), infer1(LayerSpec("s", sq), in));
    }
  }
}

TEST(ShapeInferTest, WindowExtentMatchesEnumeration) {
  for (std::int64_t in = 1; in <= 40; ++in) {
    for (std::int64_t k = 1; k <= 7; ++k) {
      for (std::int64_t s = 1; s <= 4; ++s) {
        for (std::int64_t p = 0; p < k; ++p) {
          if (in + 2 * p < k) continue;
          for (bool ceil : {false, true}) {
            ASSERT_EQ(window_output_extent(in, k, s, p, ceil),
                      oracle::window_count(in, k, s, p, ceil))
                << in << " " << k << " " << s << " " << p << " " << ceil;
          }
        }
      }
    }
  }
}

TEST(ShapeInferTest, CaffePoolRounding) {
  // 55 -> 27 with 3/2 both ways; 14 -> 7 ceil vs 6 floor.
  EXPECT_EQ(window_output_extent(55, 3, 2, 0, true), 27);
  EXPECT_EQ(window_output_extent(14, 3, 2, 0, true), 7);
  EXPECT_EQ(window_output_extent(14, 3, 2, 0, false), 6);
  // A trailing window that would start in the padding is dropped.
  EXPECT_EQ(window_output_extent(4, 2, 2, 1, true), 3);
}

TEST(ShapeInferTest, IndependentOfTopologicalOrder) {
  Graph g;
  g.add_node(testing::input());
  append(g, testing::conv("a", 8, 3, 1, 1), {"in"});
  append(g, testing::conv("b", 4, 1), {"in"});
  append(g, testing::conv("c", 4, 5, 1, 2), {"a"});
  append(g, testing::concat("cat"), {"b", "c", "a"});
  const TensorShape input{3, 17, 17};
  const auto base = infer_graph(g, input);
  const std::vector<std::vector<NodeIndex>> orders = {
      {0, 1, 2, 3, 4}, {0, 2, 1, 3, 4}, {0, 1, 3, 2, 4}};
  for (const auto& o : orders) {
    ASSERT_TRUE(is_topological_order(g, o));
    EXPECT_EQ(infer_graph(g, input, o), base);
  }
  EXPECT_EQ(base.at(g, "cat"), (TensorShape{16, 17, 17}));
}

TEST(ShapeInferTest, EveryZooModelInfers) {
  for (const auto& info : list_models()) {
    const auto m = build(info.id);
    const auto s = infer_graph(m.graph, m.input);
    EXPECT_EQ(s.size(), m.graph.size());
    EXPECT_EQ(s[*m.graph.input()], m.input);
    for (NodeIndex o : m.graph.outputs()) {
      EXPECT_EQ(s[o], (TensorShape{1000, 1, 1})) << to_string(info.id);
    }
  }
}

}  // namespace
}  // namespace dnncost
