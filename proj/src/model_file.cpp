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

#include "dnncost/model_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "dnncost/error.hpp"

namespace dnncost {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::kParse, msg);
}

json extent(const Extent2& e) { return json::array({e.h, e.w}); }

std::string_view pool_name(PoolKind k) {
  return k == PoolKind::kMax ? "max" : "avg";
}

std::string_view function_name(ActivationFn f) {
  switch (f) {
    case ActivationFn::kRelu: return "relu";
    case ActivationFn::kSigmoid: return "sigmoid";
    case ActivationFn::kTanh: return "tanh";
  }
  return "relu";
}

json attributes_to_json(const LayerAttrs& attrs) {
  json j = json::object();
  std::visit(
      [&j](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Conv2dAttrs>) {
          j["out_channels"] = a.out_channels;
          j["kernel"] = extent(a.kernel);
          j["stride"] = extent(a.stride);
          j["padding"] = extent(a.padding);
          j["groups"] = a.groups;
          j["bias"] = a.has_bias;
        } else if constexpr (std::is_same_v<T, FullyConnectedAttrs>) {
          j["out_features"] = a.out_features;
          j["bias"] = a.has_bias;
        } else if constexpr (std::is_same_v<T, PoolAttrs>) {
          j["pool"] = pool_name(a.pool);
          j["kernel"] = extent(a.kernel);
          j["stride"] = extent(a.stride);
          j["padding"] = extent(a.padding);
          j["ceil_mode"] = a.ceil_mode;
        } else if constexpr (std::is_same_v<T, GlobalPoolAttrs>) {
          j["pool"] = pool_name(a.pool);
        } else if constexpr (std::is_same_v<T, ActivationAttrs>) {
          j["function"] = function_name(a.function);
        } else if constexpr (std::is_same_v<T, BatchNormAttrs>) {
          j["affine"] = a.affine;
        } else if constexpr (std::is_same_v<T, ScaleAttrs>) {
          j["bias"] = a.has_bias;
        } else if constexpr (std::is_same_v<T, LrnAttrs>) {
          j["local_size"] = a.local_size;
        } else if constexpr (std::is_same_v<T, DropoutAttrs>) {
          j["ratio"] = a.ratio;
        }
      },
      attrs);
  return j;
}

// Reads attribute keys off one node, remembering which were consumed so
// leftovers can be reported.
class AttrReader {
 public:
  AttrReader(const json& j, std::string node) : j_(j), node_(std::move(node)) {
    if (!j_.is_object()) fail(where() + "attributes must be an object");
  }

  std::int64_t integer(const char* key, std::int64_t fallback) {
    const json* v = take(key);
    if (v == nullptr) return fallback;
    if (!v->is_number_integer()) fail(where() + key + " must be an integer");
    return v->get<std::int64_t>();
  }

  bool boolean(const char* key, bool fallback) {
    const json* v = take(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) fail(where() + key + " must be a boolean");
    return v->get<bool>();
  }

  double number(const char* key, double fallback) {
    const json* v = take(key);
    if (v == nullptr) return fallback;
    if (!v->is_number()) fail(where() + key + " must be a number");
    return v->get<double>();
  }

  /// Accepts a scalar n (meaning n x n) or a pair [h, w].
  Extent2 extent2(const char* key, Extent2 fallback) {
    const json* v = take(key);
    if (v == nullptr) return fallback;
    if (v->is_number_integer()) {
      const auto n = v->get<std::int64_t>();
      return {n, n};
    }
    if (v->is_array() && v->size() == 2 && (*v)[0].is_number_integer() &&
        (*v)[1].is_number_integer()) {
      return {(*v)[0].get<std::int64_t>(), (*v)[1].get<std::int64_t>()};
    }
    fail(where() + key + " must be an integer or [h, w]");
  }

  PoolKind pool(PoolKind fallback) {
    const json* v = take("pool");
    if (v == nullptr) return fallback;
    if (*v == "max") return PoolKind::kMax;
    if (*v == "avg") return PoolKind::kAvg;
    fail(where() + "pool must be \"max\" or \"avg\"");
  }

  ActivationFn function() {
    const json* v = take("function");
    if (v == nullptr) return ActivationFn::kRelu;
    if (*v == "relu") return ActivationFn::kRelu;
    if (*v == "sigmoid") return ActivationFn::kSigmoid;
    if (*v == "tanh") return ActivationFn::kTanh;
    fail(where() + "function must be relu, sigmoid or tanh");
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) fail(where() + "unknown attribute '" + key + "'");
    }
  }

 private:
  const json* take(const char* key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }
  std::string where() const { return "node '" + node_ + "': "; }

  const json& j_;
  std::string node_;
  std::set<std::string> used_;
};

LayerAttrs attributes_from_json(LayerKind kind, const json& j,
                                const std::string& id) {
  AttrReader r(j, id);
  LayerAttrs out;
  switch (kind) {
    case LayerKind::kInput: out = InputAttrs{}; break;
    case LayerKind::kConv2d: {
      Conv2dAttrs a;
      a.out_channels = r.integer("out_channels", a.out_channels);
      a.kernel = r.extent2("kernel", a.kernel);
      a.stride = r.extent2("stride", a.stride);
      a.padding = r.extent2("padding", a.padding);
      a.groups = r.integer("groups", a.groups);
      a.has_bias = r.boolean("bias", a.has_bias);
      out = a;
      break;
    }
    case LayerKind::kFullyConnected: {
      FullyConnectedAttrs a;
      a.out_features = r.integer("out_features", a.out_features);
      a.has_bias = r.boolean("bias", a.has_bias);
      out = a;
      break;
    }
    case LayerKind::kPool: {
      PoolAttrs a;
      a.pool = r.pool(a.pool);
      a.kernel = r.extent2("kernel", a.kernel);
      a.stride = r.extent2("stride", a.stride);
      a.padding = r.extent2("padding", a.padding);
      a.ceil_mode = r.boolean("ceil_mode", a.ceil_mode);
      out = a;
      break;
    }
    case LayerKind::kGlobalPool: out = GlobalPoolAttrs{r.pool(PoolKind::kAvg)}; break;
    case LayerKind::kActivation: out = ActivationAttrs{r.function()}; break;
    case LayerKind::kBatchNorm: out = BatchNormAttrs{r.boolean("affine", true)}; break;
    case LayerKind::kScale: out = ScaleAttrs{r.boolean("bias", true)}; break;
    case LayerKind::kLrn: out = LrnAttrs{r.integer("local_size", 5)}; break;
    case LayerKind::kDropout: out = DropoutAttrs{r.number("ratio", 0.5)}; break;
    case LayerKind::kConcat: out = ConcatAttrs{}; break;
    case LayerKind::kAdd: out = AddAttrs{}; break;
    case LayerKind::kSoftmax: out = SoftmaxAttrs{}; break;
  }
  r.finish();
  return out;
}

std::int64_t dim(const json& input, const char* key) {
  auto it = input.find(key);
  if (it == input.end() || !it->is_number_integer()) {
    fail(fmt::format("input.{} must be an integer", key));
  }
  return it->get<std::int64_t>();
}

const json& member(const json& j, const char* key, std::string_view ctx) {
  auto it = j.find(key);
  if (it == j.end()) fail(fmt::format("{}missing '{}'", ctx, key));
  return *it;
}

}  // namespace

ModelFile parse_model_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "format_version" && key != "input" && key != "nodes" &&
        key != "outputs") {
      fail(fmt::format("unknown top-level key '{}'", key));
    }
  }

  const json& version = member(doc, "format_version", "");
  if (!version.is_number_integer() ||
      version.get<std::int64_t>() != kModelFormatVersion) {
    fail(fmt::format("unsupported format_version {}", version.dump()));
  }

  const json& input = member(doc, "input", "");
  if (!input.is_object()) fail("input must be an object");
  ModelFile out;
  out.input = TensorShape{dim(input, "channels"), dim(input, "height"),
                          dim(input, "width")};
  if (!out.input.valid()) fail("input dimensions must be positive");

  const json& nodes = member(doc, "nodes", "");
  if (!nodes.is_array()) fail("nodes must be an array");

  std::vector<std::pair<std::string, std::vector<std::string>>> wiring;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& n = nodes[i];
    const std::string ctx = fmt::format("nodes[{}]: ", i);
    if (!n.is_object()) fail(ctx + "must be an object");
    for (const auto& [key, value] : n.items()) {
      if (key != "id" && key != "kind" && key != "attributes" &&
          key != "inputs") {
        fail(fmt::format("{}unknown key '{}'", ctx, key));
      }
    }
    const json& id = member(n, "id", ctx);
    if (!id.is_string() || id.get<std::string>().empty()) {
      fail(ctx + "id must be a non-empty string");
    }
    const json& kind_name = member(n, "kind", ctx);
    if (!kind_name.is_string()) fail(ctx + "kind must be a string");
    const auto kind = parse_layer_kind(kind_name.get<std::string>());
    if (!kind) {
      fail(fmt::format("{}unknown kind '{}'", ctx, kind_name.get<std::string>()));
    }
    auto a = n.find("attributes");
    const LayerAttrs attrs = attributes_from_json(
        *kind, a == n.end() ? json::object() : *a, id.get<std::string>());

    std::vector<std::string> inputs;
    if (auto in = n.find("inputs"); in != n.end()) {
      if (!in->is_array()) fail(ctx + "inputs must be an array");
      for (const auto& p : *in) {
        if (!p.is_string()) fail(ctx + "inputs must be strings");
        inputs.push_back(p.get<std::string>());
      }
    }
    out.graph.add_node(LayerSpec(id.get<std::string>(), attrs));
    wiring.emplace_back(id.get<std::string>(), std::move(inputs));
  }
  // Edges go in after every node exists, so forward references resolve
  // (and a back edge is reported as a cycle rather than an unknown id).
  for (const auto& [id, inputs] : wiring) {
    for (const auto& p : inputs) out.graph.connect(p, id);
  }

  if (auto o = doc.find("outputs"); o != doc.end()) {
    if (!o->is_array()) fail("outputs must be an array");
    for (const auto& id : *o) {
      if (!id.is_string()) fail("outputs must be strings");
      out.graph.mark_output(id.get<std::string>());
    }
  }
  ensure_valid(out.graph);
  return out;
}

ModelFile load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_file(ss.str());
}

std::string serialize_model_file(const Graph& graph, const TensorShape& input) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["input"] = {{"channels", input.channels},
                  {"height", input.height},
                  {"width", input.width}};
  json nodes = json::array();
  for (NodeIndex i = 0; i < graph.size(); ++i) {
    const LayerSpec& spec = graph.node(i);
    json inputs = json::array();
    for (NodeIndex p : graph.producers(i)) inputs.push_back(graph.node(p).id());
    nodes.push_back({{"id", spec.id()},
                     {"kind", std::string(to_string(spec.kind()))},
                     {"attributes", attributes_to_json(spec.attrs())},
                     {"inputs", std::move(inputs)}});
  }
  doc["nodes"] = std::move(nodes);
  if (graph.has_explicit_outputs()) {
    json outputs = json::array();
    for (NodeIndex o : graph.outputs()) outputs.push_back(graph.node(o).id());
    doc["outputs"] = std::move(outputs);
  }
  return doc.dump(2) + "\n";
}

std::string serialize_model_file(const ModelFile& file) {
  return serialize_model_file(file.graph, file.input);
}

void save_model_file(const std::filesystem::path& path, const Graph& graph,
                     const TensorShape& input) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot write '{}'", path.string()));
  }
  out << serialize_model_file(graph, input);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("write to '{}' failed", path.string()));
  }
}

}  // namespace dnncost
