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

#include "dnncost/layer.hpp"

#include <array>
#include <utility>

namespace dnncost {
namespace {

template <typename T, LayerKind K>
constexpr bool kMatches =
    std::is_same_v<std::variant_alternative_t<static_cast<std::size_t>(K),
                                              LayerAttrs>,
                   T>;

static_assert(kMatches<InputAttrs, LayerKind::kInput>);
static_assert(kMatches<Conv2dAttrs, LayerKind::kConv2d>);
static_assert(kMatches<FullyConnectedAttrs, LayerKind::kFullyConnected>);
static_assert(kMatches<PoolAttrs, LayerKind::kPool>);
static_assert(kMatches<ActivationAttrs, LayerKind::kActivation>);
static_assert(kMatches<BatchNormAttrs, LayerKind::kBatchNorm>);
static_assert(kMatches<ScaleAttrs, LayerKind::kScale>);
static_assert(kMatches<LrnAttrs, LayerKind::kLrn>);
static_assert(kMatches<DropoutAttrs, LayerKind::kDropout>);
static_assert(kMatches<ConcatAttrs, LayerKind::kConcat>);
static_assert(kMatches<AddAttrs, LayerKind::kAdd>);
static_assert(kMatches<SoftmaxAttrs, LayerKind::kSoftmax>);
static_assert(kMatches<GlobalPoolAttrs, LayerKind::kGlobalPool>);

constexpr std::array<std::pair<LayerKind, std::string_view>, 13> kKindNames{{
    {LayerKind::kInput, "Input"},
    {LayerKind::kConv2d, "Conv2d"},
    {LayerKind::kFullyConnected, "FullyConnected"},
    {LayerKind::kPool, "Pool"},
    {LayerKind::kActivation, "Activation"},
    {LayerKind::kBatchNorm, "BatchNorm"},
    {LayerKind::kScale, "Scale"},
    {LayerKind::kLrn, "LRN"},
    {LayerKind::kDropout, "Dropout"},
    {LayerKind::kConcat, "Concat"},
    {LayerKind::kAdd, "Add"},
    {LayerKind::kSoftmax, "Softmax"},
    {LayerKind::kGlobalPool, "GlobalPool"},
}};

}  // namespace

std::string_view to_string(LayerKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)].second;
}

std::optional<LayerKind> parse_layer_kind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

bool is_weighted(LayerKind kind) {
  return kind == LayerKind::kConv2d || kind == LayerKind::kFullyConnected;
}

std::size_t LayerSpec::min_inputs() const {
  switch (kind()) {
    case LayerKind::kInput: return 0;
    case LayerKind::kConcat:
    case LayerKind::kAdd: return 2;
    default: return 1;
  }
}

bool LayerSpec::variadic() const {
  return kind() == LayerKind::kConcat || kind() == LayerKind::kAdd;
}

}  // namespace dnncost
