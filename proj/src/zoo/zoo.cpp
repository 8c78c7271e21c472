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

#include "dnncost/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "builders.hpp"
#include "dnncost/cost_model.hpp"
#include "dnncost/error.hpp"

namespace dnncost {
namespace {

struct Entry {
  ModelId id;
  std::string_view name;
  ModelInfo info;
};

const std::vector<Entry>& entries() {
  using F = ModelFamily;
  using M = ModelId;
  static const std::vector<Entry> kEntries = {
      {M::kAlexNet, "AlexNet",
       {M::kAlexNet, F::kAlexNet, 224, 227,
        {224, 723, 60.97, 2.05, 0.03, 11.86, 352.65}}},
      {M::kSqueezeNetV10, "SqueezeNet-V1.0",
       {M::kSqueezeNetV10, F::kSqueezeNet, 224, 224,
        {224, 848, 1.25, 12.3, 9.84, 678.08, 68.91}}},
      {M::kSqueezeNetV11, "SqueezeNet-V1.1",
       {M::kSqueezeNetV11, F::kSqueezeNet, 224, 224,
        {224, 349, 1.24, 7.2, 5.81, 281.57, 48.49}}},
      {M::kGSqNxt23, "1.0-G-SqNxt-23",
       {M::kGSqNxt23, F::kSqueezeNext, 224, 227,
        {224, 221, 0.54, 17.81, 32.80, 406.35, 12.39}}},
      {M::kSqNxt23, "1.0-SqNxt-23",
       {M::kSqNxt23, F::kSqueezeNext, 224, 227,
        {224, 273, 0.72, 17.81, 24.84, 380.50, 15.32}}},
      {M::kSqNxt23v5, "1.0-SqNxt-23v5",
       {M::kSqNxt23v5, F::kSqueezeNext, 224, 227,
        {224, 225, 0.93, 14.06, 15.12, 242.04, 16.01}}},
      {M::kSqNxt23x2, "2.0-SqNxt-23",
       {M::kSqNxt23x2, F::kSqueezeNext, 224, 227,
        {224, 726, 2.36, 32.21, 13.65, 307.62, 22.54}}},
      {M::kSqNxt23v5x2, "2.0-SqNxt-23v5",
       {M::kSqNxt23v5x2, F::kSqueezeNext, 224, 227,
        {224, 703, 3.22, 24.66, 7.66, 218.41, 28.52}}},
      {M::kMobileNet224, "1.0-MobileNet-224",
       {M::kMobileNet224, F::kMobileNet, 224, 224,
        {224, 574, 4.23, 20.32, 4.80, 135.65, 28.24}}},
      {M::kDenseNet121, "DenseNet-121",
       {M::kDenseNet121, F::kDenseNet, 224, 224,
        {224, 3080, 7.98, 69.99, 8.77, 385.96, 44.01}}},
      {M::kGoogLeNet, "GoogLeNet",
       {M::kGoogLeNet, F::kInception, 224, 224,
        {224, 1590, 7.00, 10.06, 1.44, 227.14, 158.05}}},
      {M::kInceptionV2, "Inception-V2",
       {M::kInceptionV2, F::kInception, 231, 231,
        {231, 2200, 11.19, 18.03, 1.61, 196.60, 122.02}}},
  };
  return kEntries;
}

const Entry& entry(ModelId id) {
  for (const auto& e : entries()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model id");
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

zoo::SqueezeNextConfig squeezenext_defaults(ModelId id) {
  zoo::SqueezeNextConfig cfg;
  switch (id) {
    case ModelId::kGSqNxt23:
      cfg.grouped = true;
      break;
    case ModelId::kSqNxt23v5:
      cfg.blocks = {2, 4, 14, 1};
      cfg.stem_kernel = 5;
      break;
    case ModelId::kSqNxt23x2:
      cfg.width = 2.0;
      break;
    case ModelId::kSqNxt23v5x2:
      cfg.width = 2.0;
      cfg.blocks = {2, 4, 14, 1};
      cfg.stem_kernel = 5;
      break;
    default:
      break;
  }
  return cfg;
}

constexpr int kSqueezeNextBlocks = 21;

}  // namespace

std::string_view to_string(ModelId id) { return entry(id).name; }

std::string_view to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::kAlexNet: return "AlexNet";
    case ModelFamily::kSqueezeNet: return "SqueezeNet";
    case ModelFamily::kSqueezeNext: return "SqueezeNext";
    case ModelFamily::kMobileNet: return "MobileNet";
    case ModelFamily::kDenseNet: return "DenseNet";
    case ModelFamily::kInception: return "Inception";
  }
  return "unknown";
}

std::optional<ModelId> parse_model_id(std::string_view name) {
  for (const auto& e : entries()) {
    if (iequals(e.name, name)) return e.id;
  }
  return std::nullopt;
}

const std::vector<ModelInfo>& list_models() {
  static const std::vector<ModelInfo> kInfos = [] {
    std::vector<ModelInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kInfos;
}

const ModelInfo& model_info(ModelId id) { return entry(id).info; }

BuiltModel build(ModelId id, const ZooParams& params) {
  const ModelInfo& info = model_info(id);
  BuiltModel out;
  const auto ignore = [&](std::string_view what) {
    out.warnings.push_back(fmt::format("{} does not apply to {}; ignored", what,
                                       to_string(id)));
  };

  const std::int64_t size = params.input_size.value_or(info.build_input);
  if (size <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("input size must be positive, got {}", size));
  }
  out.input = TensorShape{3, size, size};

  if (params.width_multiplier && !(*params.width_multiplier > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("width multiplier must be positive, got {}",
                            *params.width_multiplier));
  }
  if (info.family != ModelFamily::kSqueezeNext) {
    if (params.block_distribution) ignore("block distribution");
    if (params.grouped) ignore("grouped flag");
  }
  if (info.family != ModelFamily::kSqueezeNext &&
      info.family != ModelFamily::kMobileNet && params.width_multiplier) {
    ignore("width multiplier");
  }

  try {
    switch (info.family) {
      case ModelFamily::kAlexNet:
        out.graph = zoo::build_alexnet(out.input);
        break;
      case ModelFamily::kSqueezeNet:
        out.graph = zoo::build_squeezenet(
            out.input, id == ModelId::kSqueezeNetV10
                           ? zoo::SqueezeNetVersion::kV10
                           : zoo::SqueezeNetVersion::kV11);
        break;
      case ModelFamily::kSqueezeNext: {
        auto cfg = squeezenext_defaults(id);
        if (params.width_multiplier) cfg.width = *params.width_multiplier;
        if (params.grouped) cfg.grouped = *params.grouped;
        if (params.block_distribution) {
          const auto& d = *params.block_distribution;
          const bool positive =
              std::all_of(d.begin(), d.end(), [](int n) { return n >= 1; });
          const int sum = std::accumulate(d.begin(), d.end(), 0);
          if (!positive || sum != kSqueezeNextBlocks) {
            throw Error(ErrorCode::kInvalidArgument,
                        fmt::format("block distribution [{},{},{},{}] must "
                                    "have positive entries summing to {}",
                                    d[0], d[1], d[2], d[3],
                                    kSqueezeNextBlocks));
          }
          cfg.blocks = d;
        }
        out.graph = zoo::build_squeezenext(out.input, cfg);
        break;
      }
      case ModelFamily::kMobileNet:
        out.graph = zoo::build_mobilenet(out.input,
                                         params.width_multiplier.value_or(1.0));
        break;
      case ModelFamily::kDenseNet:
        out.graph = zoo::build_densenet121(out.input);
        break;
      case ModelFamily::kInception:
        out.graph = id == ModelId::kGoogLeNet
                        ? zoo::build_googlenet(out.input)
                        : zoo::build_inception_v2(out.input);
        break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kShapeInference) throw;
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} cannot be built at {}x{}: {}", to_string(id),
                            size, size, e.what()));
  }
  ensure_valid(out.graph);
  return out;
}

std::string_view to_string(MacBucket bucket) {
  switch (bucket) {
    case MacBucket::kConv1x1: return "conv1x1";
    case MacBucket::kConv3x3: return "conv3x3";
    case MacBucket::kDepthwise: return "depthwise";
    case MacBucket::kAsymmetric: return "asymmetric";
    case MacBucket::kLargeConv: return "large-conv";
    case MacBucket::kOtherConv: return "other-conv";
    case MacBucket::kFullyConnected: return "fully-connected";
  }
  return "unknown";
}

double MacBreakdown::share(MacBucket b) const {
  return total == 0 ? 0.0
                    : static_cast<double>(of(b)) / static_cast<double>(total);
}

MacBucket classify_conv(const Conv2dAttrs& conv, const TensorShape& input) {
  if (conv.groups > 1 && conv.groups == input.channels) {
    return MacBucket::kDepthwise;
  }
  const auto [kh, kw] = conv.kernel;
  if (kh != kw) return MacBucket::kAsymmetric;
  if (kh == 1) return MacBucket::kConv1x1;
  if (kh == 3) return MacBucket::kConv3x3;
  if (kh >= 5) return MacBucket::kLargeConv;
  return MacBucket::kOtherConv;
}

MacBreakdown macs_by_kind(const Graph& graph, const ShapeAnnotation& shapes) {
  MacBreakdown out;
  for (NodeIndex i = 0; i < graph.size(); ++i) {
    const LayerSpec& spec = graph.node(i);
    if (spec.kind() != LayerKind::kConv2d &&
        spec.kind() != LayerKind::kFullyConnected) {
      continue;
    }
    const auto& producers = graph.producers(i);
    if (producers.empty()) continue;
    const TensorShape& in = shapes[producers.front()];
    const std::uint64_t macs = layer_macs(spec, in, shapes[i]);
    const MacBucket bucket = spec.kind() == LayerKind::kFullyConnected
                                 ? MacBucket::kFullyConnected
                                 : classify_conv(spec.as<Conv2dAttrs>(), in);
    out.macs[static_cast<std::size_t>(bucket)] += macs;
    out.total += macs;
  }
  return out;
}

}  // namespace dnncost
