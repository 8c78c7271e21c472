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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnncost/graph.hpp"
#include "dnncost/shape_infer.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost {

enum class ModelId {
  kAlexNet,
  kSqueezeNetV10,
  kSqueezeNetV11,
  kGSqNxt23,
  kSqNxt23,
  kSqNxt23v5,
  kSqNxt23x2,
  kSqNxt23v5x2,
  kMobileNet224,
  kDenseNet121,
  kGoogLeNet,
  kInceptionV2,
};

enum class ModelFamily {
  kAlexNet,
  kSqueezeNet,
  kSqueezeNext,
  kMobileNet,
  kDenseNet,
  kInception,
};

std::string_view to_string(ModelId id);
std::string_view to_string(ModelFamily family);

/// Accepts canonical names case-insensitively ("alexnet", "1.0-SqNxt-23").
std::optional<ModelId> parse_model_id(std::string_view name);

/// Published architecture characteristics for one model (megacounts).
struct ReferenceRow {
  std::int64_t image_size = 224;
  double macs_m = 0.0;
  double params_m = 0.0;
  double acts_m = 0.0;
  double acts_per_param = 0.0;
  double macs_per_param = 0.0;
  double macs_per_act = 0.0;
};

struct ModelInfo {
  ModelId id;
  ModelFamily family;
  std::int64_t nominal_input;  // as published
  std::int64_t build_input;    // what the builder uses by default
  ReferenceRow reference;
};

/// All twelve models in publication order.
const std::vector<ModelInfo>& list_models();
const ModelInfo& model_info(ModelId id);

/// Family knobs. Unset fields take the model's defaults; fields that do not
/// apply to the model's family are ignored with a warning.
struct ZooParams {
  std::optional<double> width_multiplier;                   // SqueezeNext, MobileNet
  std::optional<std::array<int, 4>> block_distribution;     // SqueezeNext
  std::optional<bool> grouped;                              // SqueezeNext "G"
  std::optional<std::int64_t> input_size;                   // all
};

struct BuiltModel {
  Graph graph;
  TensorShape input;
  std::vector<std::string> warnings;
};

/// Builds a validated graph. Throws Error{kInvalidArgument} for bad params or
/// an input too small for the architecture.
BuiltModel build(ModelId id, const ZooParams& params = {});

enum class MacBucket {
  kConv1x1,
  kConv3x3,
  kDepthwise,
  kAsymmetric,
  kLargeConv,
  kOtherConv,
  kFullyConnected,
};

std::string_view to_string(MacBucket bucket);

struct MacBreakdown {
  std::array<std::uint64_t, 7> macs{};
  std::uint64_t total = 0;

  std::uint64_t of(MacBucket b) const {
    return macs[static_cast<std::size_t>(b)];
  }
  /// Fraction of total MACs; 0 for an empty model.
  double share(MacBucket b) const;
};

/// Depthwise (groups == input channels > 1) takes precedence, then
/// asymmetric kernels, then 1x1 / 3x3 / >=5x5 square kernels; remaining
/// square sizes (2x2, 4x4) land in kOtherConv.
MacBucket classify_conv(const Conv2dAttrs& conv, const TensorShape& input);

MacBreakdown macs_by_kind(const Graph& graph, const ShapeAnnotation& shapes);

}  // namespace dnncost
