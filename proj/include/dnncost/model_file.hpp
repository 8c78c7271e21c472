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

#include <filesystem>
#include <string>
#include <string_view>

#include "dnncost/graph.hpp"
#include "dnncost/tensor_shape.hpp"

namespace dnncost {

inline constexpr int kModelFormatVersion = 1;

/// A network definition as stored on disk.
///
///   {
///     "format_version": 1,
///     "input": {"channels": 3, "height": 224, "width": 224},
///     "nodes": [{"id": "data", "kind": "Input", "attributes": {},
///                "inputs": []}, ...],
///     "outputs": ["prob"]            // optional; sinks otherwise
///   }
struct ModelFile {
  Graph graph;
  TensorShape input;
};

/// Throws Error{kParse} for malformed documents; graph-level problems keep
/// their own codes (duplicate-id, unknown-id, cycle, invalid-graph).
ModelFile parse_model_file(std::string_view text);
ModelFile load_model_file(const std::filesystem::path& path);

/// Canonical form: sorted keys, every attribute spelled out, nodes in
/// insertion order. parse(serialize(x)) serializes back to the same bytes.
std::string serialize_model_file(const Graph& graph, const TensorShape& input);
std::string serialize_model_file(const ModelFile& file);
void save_model_file(const std::filesystem::path& path, const Graph& graph,
                     const TensorShape& input);

}  // namespace dnncost
