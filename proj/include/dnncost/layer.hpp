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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dnncost {

enum class LayerKind {
  kInput,
  kConv2d,
  kFullyConnected,
  kPool,
  kActivation,
  kBatchNorm,
  kScale,
  kLrn,
  kDropout,
  kConcat,
  kAdd,
  kSoftmax,
  kGlobalPool,
};

std::string_view to_string(LayerKind kind);
std::optional<LayerKind> parse_layer_kind(std::string_view name);

/// Conv2d and FullyConnected are the only kinds that carry MACs.
bool is_weighted(LayerKind kind);

/// (height, width) pair used for kernels, strides and paddings.
struct Extent2 {
  std::int64_t h = 1;
  std::int64_t w = 1;

  friend constexpr bool operator==(const Extent2&, const Extent2&) = default;
};

struct InputAttrs {
  friend bool operator==(const InputAttrs&, const InputAttrs&) = default;
};

struct Conv2dAttrs {
  std::int64_t out_channels = 1;
  Extent2 kernel{1, 1};
  Extent2 stride{1, 1};
  Extent2 padding{0, 0};
  std::int64_t groups = 1;
  bool has_bias = false;

  friend bool operator==(const Conv2dAttrs&, const Conv2dAttrs&) = default;
};

struct FullyConnectedAttrs {
  std::int64_t out_features = 1;
  bool has_bias = false;

  friend bool operator==(const FullyConnectedAttrs&,
                         const FullyConnectedAttrs&) = default;
};

enum class PoolKind { kMax, kAvg };

struct PoolAttrs {
  PoolKind pool = PoolKind::kMax;
  Extent2 kernel{2, 2};
  Extent2 stride{2, 2};
  Extent2 padding{0, 0};
  // Caffe rounds pooled extents up; floor is the default elsewhere.
  bool ceil_mode = false;

  friend bool operator==(const PoolAttrs&, const PoolAttrs&) = default;
};

struct GlobalPoolAttrs {
  PoolKind pool = PoolKind::kAvg;

  friend bool operator==(const GlobalPoolAttrs&,
                         const GlobalPoolAttrs&) = default;
};

enum class ActivationFn { kRelu, kSigmoid, kTanh };

struct ActivationAttrs {
  ActivationFn function = ActivationFn::kRelu;

  friend bool operator==(const ActivationAttrs&,
                         const ActivationAttrs&) = default;
};

/// affine=false models a statistics-only normalization (Caffe BatchNorm)
/// whose learned scale and shift live in a following Scale node.
struct BatchNormAttrs {
  bool affine = true;

  friend bool operator==(const BatchNormAttrs&,
                         const BatchNormAttrs&) = default;
};

/// Channel-wise affine transform y = gamma * x (+ beta).
struct ScaleAttrs {
  bool has_bias = true;

  friend bool operator==(const ScaleAttrs&, const ScaleAttrs&) = default;
};

struct LrnAttrs {
  std::int64_t local_size = 5;

  friend bool operator==(const LrnAttrs&, const LrnAttrs&) = default;
};

struct DropoutAttrs {
  double ratio = 0.5;

  friend bool operator==(const DropoutAttrs&, const DropoutAttrs&) = default;
};

struct ConcatAttrs {
  friend bool operator==(const ConcatAttrs&, const ConcatAttrs&) = default;
};
struct AddAttrs {
  friend bool operator==(const AddAttrs&, const AddAttrs&) = default;
};
struct SoftmaxAttrs {
  friend bool operator==(const SoftmaxAttrs&, const SoftmaxAttrs&) = default;
};

using LayerAttrs =
    std::variant<InputAttrs, Conv2dAttrs, FullyConnectedAttrs, PoolAttrs,
                 ActivationAttrs, BatchNormAttrs, ScaleAttrs, LrnAttrs,
                 DropoutAttrs, ConcatAttrs, AddAttrs, SoftmaxAttrs,
                 GlobalPoolAttrs>;

/// One operator of the network. The kind is derived from the attribute
/// alternative, so the two can never disagree.
class LayerSpec {
 public:
  LayerSpec(std::string id, LayerAttrs attrs)
      : id_(std::move(id)), attrs_(std::move(attrs)) {}

  const std::string& id() const { return id_; }
  LayerKind kind() const { return static_cast<LayerKind>(attrs_.index()); }
  const LayerAttrs& attrs() const { return attrs_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(attrs_);
  }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&attrs_);
  }

  /// Number of producers this kind requires: exact for unary kinds, a
  /// minimum for Concat/Add.
  std::size_t min_inputs() const;
  bool variadic() const;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;

 private:
  std::string id_;
  LayerAttrs attrs_;
};

// Ordering of LayerAttrs alternatives must mirror LayerKind.
static_assert(std::variant_size_v<LayerAttrs> ==
              static_cast<std::size_t>(LayerKind::kGlobalPool) + 1);

}  // namespace dnncost
