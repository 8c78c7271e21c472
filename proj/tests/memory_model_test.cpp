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

#include "dnncost/memory_model.hpp"

#include <numeric>
#include <random>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "dnncost/cost_model.hpp"
#include "dnncost/error.hpp"
#include "dnncost/zoo.hpp"
#include "oracles.hpp"
#include "test_util.hpp"
#include "topology_graphs.hpp"

namespace dnncost {
namespace {

using testing::append;

LivenessProblem problem(std::vector<std::uint64_t> sizes,
                        std::vector<std::vector<std::size_t>> producers,
                        std::vector<bool> may_alias = {}) {
  LivenessProblem p;
  const std::size_t n = sizes.size();
  p.sizes = std::move(sizes);
  p.producers = std::move(producers);
  p.may_alias = may_alias.empty() ? std::vector<bool>(n, false) : may_alias;
  std::vector<bool> consumed(n, false);
  for (const auto& ps : p.producers) {
    for (auto q : ps) consumed[q] = true;
  }
  p.outputs.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.outputs[i] = !consumed[i];
  return p;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(LivenessTest, LinearChain) {
  const auto p = problem({100, 50, 25}, {{}, {0}, {1}});
  const auto prof = simulate_liveness(p, iota(3));
  EXPECT_EQ(prof.peak, 150u);
  EXPECT_EQ(prof.peak_step, 1u);
  EXPECT_EQ(prof.live, (std::vector<std::uint64_t>{100, 150, 75}));
}

TEST(LivenessTest, SkipConnectionWithAndWithoutAliasing) {
  // A(100) -> B(50); A, B -> C(100), C an Add.
  const auto naive = problem({100, 50, 100}, {{}, {0}, {0, 1}});
  EXPECT_EQ(simulate_liveness(naive, iota(3)).peak, 250u);
  const auto aliased =
      problem({100, 50, 100}, {{}, {0}, {0, 1}}, {false, false, true});
  EXPECT_EQ(simulate_liveness(aliased, iota(3)).peak, 150u);
}

TEST(LivenessTest, SingleNode) {
  EXPECT_EQ(simulate_liveness(problem({42}, {{}}), iota(1)).peak, 42u);
}

TEST(LivenessTest, RejectsBadOrders) {
  const auto p = problem({1, 2, 3}, {{}, {0}, {1}});
  const std::vector<std::size_t> reversed{2, 1, 0}, repeated{0, 0, 1}, short_{0, 1};
  EXPECT_THROW(simulate_liveness(p, reversed), Error);
  EXPECT_THROW(simulate_liveness(p, repeated), Error);
  EXPECT_THROW(simulate_liveness(p, short_), Error);
}

TEST(LivenessTest, AliasNeedsLastReaderAndRoom) {
  // 0 -> 1 (alias candidate) and 0 -> 2: 1 is not 0's last reader.
  auto p = problem({10, 10, 10}, {{}, {0}, {0}}, {false, true, false});
  EXPECT_EQ(simulate_liveness(p, iota(3)).peak, 30u);
  // Same with 1 scheduled last: alias taken.
  const std::vector<std::size_t> late{0, 2, 1};
  EXPECT_EQ(simulate_liveness(p, late).peak, 20u);
  // A larger output cannot reuse a smaller buffer.
  auto big = problem({10, 20}, {{}, {0}}, {false, true});
  EXPECT_EQ(simulate_liveness(big, iota(2)).peak, 30u);
  // Network outputs are never overwritten.
  auto out = problem({10, 10}, {{}, {0}}, {false, true});
  out.outputs = {true, true};
  EXPECT_EQ(simulate_liveness(out, iota(2)).peak, 20u);
}

oracle::LivenessCase to_case(const LivenessProblem& p) {
  return {p.sizes, p.producers, p.outputs, p.may_alias};
}

// Every DAG on up to five nodes (edges only from lower to higher index),
// every topological order, with and without aliasing.
TEST(LivenessTest, ExhaustiveSmallDagsMatchBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint64_t> size(1, 9);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::vector<std::size_t>> producers(n);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask & (1u << e)) producers[pairs[e].second].push_back(pairs[e].first);
      }
      std::vector<std::uint64_t> sizes(n);
      for (auto& s : sizes) s = size(rng);
      std::vector<bool> alias(n);
      for (std::size_t i = 0; i < n; ++i) alias[i] = (rng() & 1u) != 0;
      const auto orders = oracle::all_orders(producers);
      for (bool use_alias : {false, true}) {
        auto p = problem(sizes, producers,
                         use_alias ? alias : std::vector<bool>(n, false));
        for (const auto& o : orders) {
          ASSERT_EQ(simulate_liveness(p, o).peak,
                    oracle::brute_force_peak(to_case(p), o))
              << "n=" << n << " mask=" << mask;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 10000u);
}

void expect_oracle_agreement(const std::vector<testing::TopologyCase>& cases) {
  for (const auto& t : cases) {
    ASSERT_LE(t.graph.size(), 8u) << t.name;
    const auto tally = testing::check_against_oracle(t);
    EXPECT_GT(tally.checked, 0u);
    EXPECT_EQ(tally.mismatches, 0u) << t.name;
  }
}

TEST(LivenessTest, ChainsMatchBruteForce) {
  expect_oracle_agreement(testing::chain_graphs());
}

TEST(LivenessTest, DiamondsMatchBruteForce) {
  expect_oracle_agreement(testing::diamond_graphs());
}

TEST(LivenessTest, DenseBlocksMatchBruteForceAndHoldEverything) {
  const auto cases = testing::dense_graphs();
  expect_oracle_agreement(cases);
  for (const auto& t : cases) {
    const auto shapes = infer_graph(t.graph, t.input);
    const auto total = model_cost(t.graph, shapes).totals.activations;
    EXPECT_EQ(liveness_peak(t.graph, shapes, topological_order(t.graph)), total);
  }
}

TEST(LivenessTest, ChainPeakIsMaxAdjacentPair) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint64_t> size(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    std::vector<std::uint64_t> sizes(n);
    std::vector<std::vector<std::size_t>> producers(n);
    for (std::size_t i = 0; i < n; ++i) {
      sizes[i] = size(rng);
      if (i > 0) producers[i] = {i - 1};
    }
    std::uint64_t expected = 0;
    for (std::size_t i = 1; i < n; ++i) {
      expected = std::max(expected, sizes[i - 1] + sizes[i]);
    }
    ASSERT_EQ(simulate_liveness(problem(sizes, producers), iota(n)).peak,
              expected);
  }
}

TEST(LivenessTest, PeakNeverExceedsTotal) {
  for (const auto& info : list_models()) {
    const auto m = build(info.id);
    const auto shapes = infer_graph(m.graph, m.input);
    const auto total = model_cost(m.graph, shapes).totals.activations;
    EXPECT_LE(liveness_peak(m.graph, shapes, topological_order(m.graph)), total);
  }
}

struct Built {
  BuiltModel model;
  ShapeAnnotation shapes;
};

Built built(ModelId id) {
  auto m = build(id);
  auto s = infer_graph(m.graph, m.input);
  return {std::move(m), std::move(s)};
}

TEST(FootprintTest, AlexNetWeights) {
  const auto b = built(ModelId::kAlexNet);
  const auto e = footprint(b.model.graph, b.shapes, 1);
  const auto params = model_cost(b.model.graph, b.shapes).totals.params;
  EXPECT_EQ(e.weight_bytes, params * 4);
  EXPECT_NEAR(e.weight_bytes / 1e6, 243.9, 243.9 * 0.01);
  EXPECT_EQ(e.gradient_bytes, 0u);
  EXPECT_EQ(e.total_bytes, e.weight_bytes + e.peak_activation_bytes +
                               e.gradient_bytes + e.fixed_overhead_bytes);
}

TEST(FootprintTest, LinearInBatch) {
  for (const auto& info : list_models()) {
    const auto b = built(info.id);
    for (const auto& cfg :
         {MemoryConfig{}, MemoryConfig{2, ExecutionMode::kTraining, 5, {}, true, false},
          MemoryConfig{4, ExecutionMode::kInference, 0, {false, false}, false, false}}) {
      const auto one = footprint(b.model.graph, b.shapes, 1, cfg);
      for (std::uint64_t batch : {2u, 3u, 64u}) {
        const auto e = footprint(b.model.graph, b.shapes, batch, cfg);
        ASSERT_EQ(e.peak_activation_bytes, one.peak_activation_bytes * batch);
        ASSERT_EQ(e.weight_bytes, one.weight_bytes);
        ASSERT_EQ(e.total_bytes, e.weight_bytes + e.peak_activation_bytes +
                                     e.gradient_bytes + e.fixed_overhead_bytes);
      }
    }
  }
}

TEST(FootprintTest, TrainingResidentAndGradients) {
  const auto b = built(ModelId::kSqueezeNetV11);
  const auto totals = model_cost(b.model.graph, b.shapes).totals;
  MemoryConfig train;
  train.mode = ExecutionMode::kTraining;
  const auto e = footprint(b.model.graph, b.shapes, 3, train);
  EXPECT_EQ(e.peak_activation_bytes, totals.activations * 3 * 4);
  EXPECT_EQ(e.gradient_bytes, (totals.params + totals.activations * 3) * 4);
  const auto inf = footprint(b.model.graph, b.shapes, 3);
  EXPECT_GE(e.total_bytes, inf.total_bytes);
}

TEST(FootprintTest, MonotoneInBatchAndElementSize) {
  const auto b = built(ModelId::kSqueezeNetV10);
  const std::uint64_t batches[] = {1, 4, 128};
  const auto series = footprint_vs_batch(b.model.graph, b.shapes, batches);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_LT(series[0].total_bytes, series[1].total_bytes);
  EXPECT_LT(series[1].total_bytes, series[2].total_bytes);
  std::uint64_t prev = 0;
  for (std::uint64_t bpe : {1u, 2u, 4u, 8u}) {
    MemoryConfig c;
    c.bytes_per_element = bpe;
    const auto t = footprint(b.model.graph, b.shapes, 2, c).total_bytes;
    EXPECT_GT(t, prev);
    prev = t;
  }
  EXPECT_THROW(footprint_vs_batch(b.model.graph, b.shapes, {}), Error);
}

TEST(FootprintTest, RejectsBadConfig) {
  const auto b = built(ModelId::kSqueezeNetV11);
  EXPECT_THROW(footprint(b.model.graph, b.shapes, 0), Error);
  MemoryConfig c;
  c.bytes_per_element = 3;
  EXPECT_THROW(footprint(b.model.graph, b.shapes, 1, c), Error);
}

TEST(FootprintTest, PerImageSlopes) {
  MemoryConfig retain;
  retain.reuse_buffers = false;
  for (auto [id, implied] : {std::pair{ModelId::kAlexNet, 10.0},
                             std::pair{ModelId::kSqueezeNetV10, 60.0}}) {
    const auto b = built(id);
    const auto one = footprint(b.model.graph, b.shapes, 1, retain);
    const auto two = footprint(b.model.graph, b.shapes, 2, retain);
    const double slope_mb = (two.total_bytes - one.total_bytes) / 1e6;
    EXPECT_GT(slope_mb, implied / 2);
    EXPECT_LT(slope_mb, implied * 2);
  }
}

TEST(FootprintTest, DenseNetHasLargestPeak) {
  std::uint64_t dense = 0, others = 0;
  for (const auto& info : list_models()) {
    const auto b = built(info.id);
    const auto peak = footprint(b.model.graph, b.shapes, 1).peak_activation_bytes;
    if (info.id == ModelId::kDenseNet121) {
      dense = peak;
    } else {
      others = std::max(others, peak);
    }
  }
  EXPECT_GT(dense, others);
}

TEST(FootprintTest, OverheadIsAdded) {
  const auto b = built(ModelId::kSqueezeNetV11);
  MemoryConfig c;
  c.fixed_overhead_bytes = 300u << 20;
  const auto e = footprint(b.model.graph, b.shapes, 1, c);
  EXPECT_EQ(e.total_bytes - footprint(b.model.graph, b.shapes, 1).total_bytes,
            c.fixed_overhead_bytes);
}

}  // namespace
}  // namespace dnncost
