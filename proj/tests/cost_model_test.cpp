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

#include "dnncost/cost_model.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dnncost/error.hpp"
#include "dnncost/zoo.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace dnncost {
namespace {

using testing::append;

TensorShape out_of(const LayerSpec& spec, const TensorShape& in) {
  return infer_node(spec, {&in, 1});
}

TEST(CostModelTest, ConvParams) {
  EXPECT_EQ(layer_params(testing::conv("c", 96, 11, 4), {3, 227, 227}), 34848u);
  EXPECT_EQ(layer_params(testing::conv("c", 1, 1), {1, 4, 4}), 1u);
  EXPECT_EQ(layer_params(testing::conv("c", 32, 3, 1, 1, 32), {32, 8, 8}),
            288u);
}

TEST(CostModelTest, BiasIsOptIn) {
  Conv2dAttrs a;
  a.out_channels = 96;
  a.kernel = {11, 11};
  a.has_bias = true;
  const LayerSpec c("c", a);
  EXPECT_EQ(layer_params(c, {3, 227, 227}), 34848u);
  EXPECT_EQ(layer_params(c, {3, 227, 227}, true), 34848u + 96u);
  // A layer without a bias term never gains one.
  EXPECT_EQ(layer_params(testing::conv("c", 96, 11), {3, 227, 227}, true),
            34848u);
  const LayerSpec fc("f", FullyConnectedAttrs{10, true});
  EXPECT_EQ(layer_params(fc, {4, 2, 2}), 160u);
  EXPECT_EQ(layer_params(fc, {4, 2, 2}, true), 170u);
}

TEST(CostModelTest, NormalizationParams) {
  const TensorShape s{64, 5, 5};
  EXPECT_EQ(layer_params(LayerSpec("b", BatchNormAttrs{true}), s), 128u);
  EXPECT_EQ(layer_params(LayerSpec("b", BatchNormAttrs{false}), s), 0u);
  EXPECT_EQ(layer_params(LayerSpec("s", ScaleAttrs{true}), s), 128u);
  EXPECT_EQ(layer_params(LayerSpec("s", ScaleAttrs{false}), s), 64u);
}

TEST(CostModelTest, UnweightedKindsHaveNoParams) {
  const TensorShape s{8, 6, 6};
  PoolAttrs p;
  for (const LayerSpec& spec :
       {testing::relu("r"), LayerSpec("p", p), testing::concat("c"),
        testing::add("a"), LayerSpec("d", DropoutAttrs{}),
        LayerSpec("s", SoftmaxAttrs{}), testing::input(),
        LayerSpec("l", LrnAttrs{}), LayerSpec("g", GlobalPoolAttrs{})}) {
    EXPECT_EQ(layer_params(spec, s), 0u) << to_string(spec.kind());
    EXPECT_EQ(layer_macs(spec, s, s), 0u) << to_string(spec.kind());
  }
}

TEST(CostModelTest, Activations) {
  EXPECT_EQ(layer_activations(testing::relu("r"), {96, 55, 55}), 290400u);
  EXPECT_EQ(layer_activations(testing::relu("r"), {1, 1, 1}), 1u);
  EXPECT_EQ(layer_activations(testing::conv("c", 1, 5), {1, 220, 220}), 48400u);
  EXPECT_EQ(layer_activations(testing::relu("r"), {96, 55, 55},
                              CountingConvention::kWeightedOnly),
            0u);
  EXPECT_EQ(layer_activations(testing::conv("c", 1, 5), {1, 220, 220},
                              CountingConvention::kWeightedOnly),
            48400u);
}

TEST(CostModelTest, Macs) {
  const auto c1 = testing::conv("c", 96, 11, 4);
  EXPECT_EQ(layer_macs(c1, {3, 227, 227}, {96, 55, 55}), 105415200u);
  EXPECT_EQ(layer_macs(testing::conv("c", 1, 1), {1, 7, 7}, {1, 7, 7}), 49u);
  const std::int64_t c = 24, s = 13;
  EXPECT_EQ(layer_macs(testing::conv("d", c, 3, 1, 1, c), {c, s, s}, {c, s, s}),
            static_cast<std::uint64_t>(c * s * s * 9));
  EXPECT_EQ(layer_macs(LayerSpec("f", FullyConnectedAttrs{1000, false}),
                       {256, 6, 6}, {1000, 1, 1}),
            9216000u);
}

TEST(CostModelTest, MacsMatchLoopCount) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ch(1, 6), k(1, 5), s(1, 3), sp(5, 14),
      gsel(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t groups = std::int64_t{1} << gsel(rng);
    const std::int64_t in_c = ch(rng) * groups;
    const std::int64_t out_c = ch(rng) * groups;
    Conv2dAttrs a;
    a.out_channels = out_c;
    a.kernel = {k(rng), k(rng)};
    a.stride = {s(rng), s(rng)};
    a.groups = groups;
    const TensorShape in{in_c, sp(rng), sp(rng)};
    const LayerSpec spec("c", a);
    const TensorShape out = out_of(spec, in);
    ASSERT_EQ(layer_macs(spec, in, out),
              oracle::conv_macs_by_loops(in_c, out_c, a.kernel.h, a.kernel.w,
                                         out.height, out.width, groups));
  }
}

TEST(CostModelTest, ModelCostSingleInput) {
  Graph g;
  g.add_node(testing::input());
  const TensorShape in{3, 10, 10};
  const auto cost = model_cost(g, infer_graph(g, in));
  EXPECT_EQ(cost.totals, (CostTotals{0, 300, 0}));
  const auto w =
      model_cost(g, infer_graph(g, in), {CountingConvention::kWeightedOnly, false});
  EXPECT_EQ(w.totals, (CostTotals{0, 0, 0}));
}

TEST(CostModelTest, TotalsAreLayerSums) {
  for (const auto& info : list_models()) {
    const auto m = build(info.id);
    const auto cost = model_cost(m.graph, infer_graph(m.graph, m.input));
    CostTotals sum;
    for (const auto& l : cost.layers) {
      sum.params += l.params;
      sum.activations += l.activations;
      sum.macs += l.macs;
    }
    EXPECT_EQ(sum, cost.totals) << to_string(info.id);
    EXPECT_EQ(cost.layers.size(), m.graph.size());
  }
}

TEST(CostModelTest, AlexNetAndSqueezeNetTotals) {
  const auto cost = [](ModelId id) {
    const auto m = build(id);
    return model_cost(m.graph, infer_graph(m.graph, m.input)).totals;
  };
  const auto alex = cost(ModelId::kAlexNet);
  EXPECT_NEAR(alex.params / 1e6, 60.97, 60.97 * 0.01);
  EXPECT_NEAR(alex.macs / 1e6, 723, 723 * 0.02);
  const auto sq = cost(ModelId::kSqueezeNetV11);
  EXPECT_NEAR(sq.params / 1e6, 1.24, 1.24 * 0.03);
  EXPECT_NEAR(sq.macs / 1e6, 349, 349 * 0.05);
}

TEST(CostModelTest, InvariantUnderOrderAndConstruction) {
  Graph a;
  a.add_node(testing::input("x"));
  append(a, testing::conv("p", 8, 3, 1, 1), {"x"});
  append(a, testing::conv("q", 8, 1), {"x"});
  append(a, testing::add("s"), {"p", "q"});
  append(a, testing::conv("t", 4, 3), {"s"});

  Graph b;
  b.add_node(testing::conv("t", 4, 3));
  b.add_node(testing::conv("q", 8, 1));
  b.add_node(testing::add("s"));
  b.add_node(testing::input("x"));
  b.add_node(testing::conv("p", 8, 3, 1, 1));
  b.connect("x", "q");
  b.connect("s", "t");
  b.connect("x", "p");
  b.connect("q", "s");
  b.connect("p", "s");

  const TensorShape in{3, 12, 12};
  const auto ta = model_cost(a, infer_graph(a, in)).totals;
  EXPECT_EQ(model_cost(b, infer_graph(b, in)).totals, ta);
  const std::vector<NodeIndex> alt{0, 2, 1, 3, 4};
  ASSERT_TRUE(is_topological_order(a, alt));
  EXPECT_EQ(model_cost(a, infer_graph(a, in, alt), alt).totals, ta);
}

TEST(CostModelTest, DerivedRatios) {
  const auto r = derived_ratios({60'970'000, 2'050'000, 723'000'000});
  EXPECT_NEAR(r.acts_per_param, 0.03, 0.005);
  EXPECT_NEAR(r.macs_per_param, 11.86, 0.005);
  EXPECT_NEAR(r.macs_per_act, 352.65, 0.05);

  // The printed ratios come from unrounded counts; they must lie within the
  // range the rounded inputs allow (0.54 M is 0.535..0.545 M).
  const auto g = derived_ratios({540'000, 17'810'000, 221'000'000});
  const auto spans = [](double printed, double num, double num_half,
                        double den, double den_half) {
    return printed >= (num - num_half) / (den + den_half) &&
           printed <= (num + num_half) / (den - den_half);
  };
  EXPECT_TRUE(spans(32.80, 17.81, 0.005, 0.54, 0.005));
  EXPECT_TRUE(spans(406.35, 221, 0.5, 0.54, 0.005));
  EXPECT_TRUE(spans(12.39, 221, 0.5, 17.81, 0.005));
  EXPECT_NEAR(g.acts_per_param, 17.81 / 0.54, 1e-9);
  EXPECT_NEAR(g.macs_per_param, 221 / 0.54, 1e-9);
  EXPECT_NEAR(g.macs_per_act, 12.39, 12.39 * 0.005);

  const auto one = derived_ratios({5, 5, 5});
  EXPECT_EQ(one.acts_per_param, 1.0);
  EXPECT_EQ(one.macs_per_param, 1.0);
  EXPECT_EQ(one.macs_per_act, 1.0);

  EXPECT_THROW(derived_ratios({0, 5, 5}), Error);
  EXPECT_THROW(derived_ratios({5, 0, 5}), Error);
}

Conv2dAttrs sq(std::int64_t k, std::int64_t out = 1) {
  Conv2dAttrs a;
  a.out_channels = out;
  a.kernel = {k, k};
  return a;
}

TEST(CostModelTest, FactorizeFiveByFive) {
  const Conv2dAttrs chain[] = {sq(3), sq(3)};
  const auto r = factorization_compare(sq(5), chain, {1, 224, 224});
  EXPECT_EQ(r.activations.original, 48400);
  EXPECT_EQ(r.activations.replacement, 97684);
  EXPECT_NEAR(r.activations.percent, 101.826, 1e-3);
  EXPECT_EQ(r.params.original, 25);
  EXPECT_EQ(r.params.replacement, 18);
  EXPECT_NEAR(r.params.percent, -28.0, 1e-9);
  EXPECT_NEAR(r.macs.percent, -27.343, 1e-3);
  EXPECT_EQ(r.replacement_outputs.size(), 2u);
  EXPECT_EQ(r.output, (TensorShape{1, 220, 220}));
}

TEST(CostModelTest, FactorizeThreeByThreeAsymmetric) {
  Conv2dAttrs h = sq(1);
  h.kernel = {1, 3};
  Conv2dAttrs v = sq(1);
  v.kernel = {3, 1};
  const Conv2dAttrs chain[] = {h, v};
  const auto r = factorization_compare(sq(3), chain, {1, 32, 32});
  EXPECT_EQ(r.params.original, 9);
  EXPECT_EQ(r.params.replacement, 6);
  EXPECT_NEAR(r.params.percent, -100.0 / 3.0, 1e-9);
}

TEST(CostModelTest, FactorizeIdentity) {
  const Conv2dAttrs chain[] = {sq(3, 4)};
  const auto r = factorization_compare(sq(3, 4), chain, {2, 16, 16});
  for (const auto* d : {&r.params, &r.activations, &r.macs, &r.macs_per_param,
                        &r.macs_per_act}) {
    EXPECT_EQ(d->absolute, 0.0);
    EXPECT_EQ(d->percent, 0.0);
  }
}

TEST(CostModelTest, FactorizeShapeMismatch) {
  const Conv2dAttrs chain[] = {sq(3)};
  try {
    factorization_compare(sq(5), chain, {1, 32, 32});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
  EXPECT_THROW(factorization_compare(sq(5), {}, {1, 32, 32}), Error);
}

TEST(CostModelTest, MacsAreParamsTimesOutputSpatial) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> ch(1, 512), k(1, 7), s(1, 3),
      p(0, 3), sp(7, 256);
  for (int trial = 0; trial < 1000; ++trial) {
    Conv2dAttrs a;
    a.out_channels = ch(rng);
    a.kernel = {k(rng), k(rng)};
    a.stride = {s(rng), s(rng)};
    a.padding = {p(rng), p(rng)};
    const TensorShape in{ch(rng), sp(rng), sp(rng)};
    const LayerSpec spec("c", a);
    const TensorShape out = out_of(spec, in);
    ASSERT_EQ(layer_macs(spec, in, out),
              layer_params(spec, in) * out.spatial_count());
  }
}

TEST(CostModelTest, SeparableReductionIdentity) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> ch(2, 1024), k(1, 7), sp(8, 128);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t c = ch(rng), kk = k(rng), s = sp(rng);
    const std::int64_t pad = kk / 2;
    if (kk % 2 == 0) continue;
    const TensorShape in{c, s, s};
    const auto dw = testing::conv("dw", c, kk, 1, pad, c);
    const auto pw = testing::conv("pw", c, 1);
    const auto full = testing::conv("full", c, kk, 1, pad);
    const TensorShape mid = out_of(dw, in);
    const double sep = static_cast<double>(layer_macs(dw, in, mid) +
                                           layer_macs(pw, mid, out_of(pw, mid)));
    const double std_macs =
        static_cast<double>(layer_macs(full, in, out_of(full, in)));
    const double expected = 1.0 / c + 1.0 / static_cast<double>(kk * kk);
    ASSERT_NEAR(sep / std_macs / expected, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace dnncost
