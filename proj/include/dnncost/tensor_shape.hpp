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
#include <ostream>

namespace dnncost {

/// Per-image feature-map dimensions. Batch is never part of a shape; the
/// memory model scales by batch separately.
struct TensorShape {
  std::int64_t channels = 1;
  std::int64_t height = 1;
  std::int64_t width = 1;

  constexpr bool valid() const {
    return channels >= 1 && height >= 1 && width >= 1;
  }
  constexpr std::uint64_t element_count() const {
    return static_cast<std::uint64_t>(channels) *
           static_cast<std::uint64_t>(height) *
           static_cast<std::uint64_t>(width);
  }
  constexpr std::uint64_t spatial_count() const {
    return static_cast<std::uint64_t>(height) *
           static_cast<std::uint64_t>(width);
  }

  friend constexpr bool operator==(const TensorShape&,
                                   const TensorShape&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TensorShape& s) {
  return os << "(" << s.channels << ", " << s.height << ", " << s.width << ")";
}

}  // namespace dnncost
