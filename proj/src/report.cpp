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

#include "dnncost/report.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "dnncost/error.hpp"
#include "dnncost/shape_infer.hpp"

namespace dnncost {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kMega = 1e6;
constexpr double kMiB = 1024.0 * 1024.0;

constexpr std::array<MacBucket, 7> kBuckets{
    MacBucket::kConv1x1,    MacBucket::kConv3x3,   MacBucket::kDepthwise,
    MacBucket::kAsymmetric, MacBucket::kLargeConv, MacBucket::kOtherConv,
    MacBucket::kFullyConnected};

std::string num(double v) { return fmt::format("{}", v); }

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json finite_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string shape_text(const TensorShape& s) {
  return fmt::format("({}, {}, {})", s.channels, s.height, s.width);
}

std::string mb(std::uint64_t bytes) {
  return fmt::format("{:.2f}", static_cast<double>(bytes) / kMiB);
}

std::string ratio_text(const std::optional<RatioMetrics>& r, double RatioMetrics::*f) {
  return r ? fmt::format("{:.2f}", (*r).*f) : std::string("n/a");
}

}  // namespace

ModelAnalysis analyze(std::string name, const Graph& graph,
                      const TensorShape& input, const AnalysisOptions& options) {
  ensure_valid(graph);
  check_machine(options.machine);
  ModelAnalysis out;
  out.name = std::move(name);
  out.input = input;
  const auto order = topological_order(graph);
  const ShapeAnnotation shapes = infer_graph(graph, input, order);
  out.cost = model_cost(graph, shapes, order, options.cost);
  if (out.cost.totals.params > 0 && out.cost.totals.activations > 0) {
    out.ratios = derived_ratios(out.cost.totals);
  }
  MemoryConfig memory = options.memory;
  memory.include_bias = options.cost.include_bias;
  out.memory = footprint(graph, shapes, options.batch, memory);
  out.roofline = roofline_classify(out.cost.totals,
                                   options.memory.bytes_per_element,
                                   options.machine);
  out.mac_shares = macs_by_kind(graph, shapes);
  return out;
}

ModelAnalysis analyze(ModelId id, const ZooParams& params,
                      const AnalysisOptions& options) {
  BuiltModel built = build(id, params);
  ModelAnalysis out =
      analyze(std::string(to_string(id)), built.graph, built.input, options);
  out.reference = model_info(id).reference;
  out.warnings = std::move(built.warnings);
  return out;
}

void attach_measurements(std::span<ModelAnalysis> analyses,
                         std::span<const MeasurementRecord> records) {
  for (auto& a : analyses) {
    for (const auto& r : records) {
      if (r.model_id == a.name) {
        a.measurement = r;
        break;
      }
    }
  }
}

std::string render_text(std::span<const ModelAnalysis> analyses,
                        const AnalysisOptions& options) {
  std::string out = fmt::format(
      "convention: {}  batch: {}  mode: {}  bytes/element: {}  "
      "machine: {:g} MAC/s, {:g} B/s\n\n",
      to_string(options.cost.convention), options.batch,
      to_string(options.memory.mode), options.memory.bytes_per_element,
      options.machine.peak_macs_per_second,
      options.machine.peak_bytes_per_second);
  out += fmt::format(
      "{:<20} {:>9} {:>10} {:>10} {:>9} {:>11} {:>11} {:>9} {:>10} {:>10} "
      "{:>10} {:>9} {}\n",
      "model", "input", "MACs(M)", "Params(M)", "Acts(M)", "Acts/Params",
      "MACs/Params", "MACs/Acts", "weights", "peak-acts", "total",
      "intensity", "bound");
  for (const auto& a : analyses) {
    const auto& t = a.cost.totals;
    out += fmt::format(
        "{:<20} {:>9} {:>10.2f} {:>10.2f} {:>9.2f} {:>11} {:>11} {:>9} "
        "{:>10} {:>10} {:>10} {:>9.2f} {}\n",
        a.name, fmt::format("{}x{}", a.input.height, a.input.width),
        t.macs / kMega, t.params / kMega, t.activations / kMega,
        ratio_text(a.ratios, &RatioMetrics::acts_per_param),
        ratio_text(a.ratios, &RatioMetrics::macs_per_param),
        ratio_text(a.ratios, &RatioMetrics::macs_per_act),
        mb(a.memory.weight_bytes), mb(a.memory.peak_activation_bytes),
        mb(a.memory.total_bytes), a.roofline.intensity,
        to_string(a.roofline.bound));
  }
  out += "(memory columns in MB, 1 MB = 2^20 bytes; intensity in MACs/byte)\n";

  out += fmt::format("\nMAC share by kind (%)\n{:<20}", "model");
  for (MacBucket b : kBuckets) out += fmt::format(" {:>10}", to_string(b));
  out += "\n";
  for (const auto& a : analyses) {
    out += fmt::format("{:<20}", a.name);
    for (MacBucket b : kBuckets) {
      out += fmt::format(" {:>10.2f}", 100.0 * a.mac_shares.share(b));
    }
    out += "\n";
  }

  bool any_reference = false;
  for (const auto& a : analyses) any_reference |= a.reference.has_value();
  if (any_reference) {
    out += fmt::format("\nreference (published)\n{:<20} {:>9} {:>10} {:>10} "
                       "{:>9} {:>11} {:>11} {:>9}\n",
                       "model", "input", "MACs(M)", "Params(M)", "Acts(M)",
                       "Acts/Params", "MACs/Params", "MACs/Acts");
    for (const auto& a : analyses) {
      if (!a.reference) continue;
      const auto& r = *a.reference;
      out += fmt::format(
          "{:<20} {:>9} {:>10.2f} {:>10.2f} {:>9.2f} {:>11.2f} {:>11.2f} "
          "{:>9.2f}\n",
          a.name, fmt::format("{}x{}", r.image_size, r.image_size), r.macs_m,
          r.params_m, r.acts_m, r.acts_per_param, r.macs_per_param,
          r.macs_per_act);
    }
  }

  bool any_measurement = false;
  for (const auto& a : analyses) any_measurement |= a.measurement.has_value();
  if (any_measurement) {
    out += fmt::format("\nmeasured\n{:<20} {:>12} {:>12} {:>12} {:>10}\n",
                       "model", "footprint", "latency(ms)", "energy",
                       "fps");
    for (const auto& a : analyses) {
      if (!a.measurement) continue;
      const auto& m = *a.measurement;
      const auto cell = [](const std::optional<double>& v) {
        return v ? fmt::format("{:.2f}", *v) : std::string("-");
      };
      out += fmt::format("{:<20} {:>12} {:>12} {:>12} {:>10}\n", a.name,
                         cell(m.footprint_mb), cell(m.inference_ms),
                         cell(m.energy_eff), cell(m.throughput_fps));
    }
  }

  for (const auto& a : analyses) {
    for (const auto& w : a.warnings) out += fmt::format("warning: {}: {}\n", a.name, w);
  }
  return out;
}

std::string render_csv(std::span<const ModelAnalysis> analyses,
                       const AnalysisOptions& options) {
  std::string out =
      "model,input_channels,input_height,input_width,convention,batch,mode,"
      "bytes_per_element,params,activations,macs,acts_per_param,"
      "macs_per_param,macs_per_act,weight_bytes,peak_activation_bytes,"
      "gradient_bytes,fixed_overhead_bytes,total_bytes,intensity,ridge_point,"
      "bound";
  for (MacBucket b : kBuckets) out += fmt::format(",share_{}", to_string(b));
  out += ",ref_macs_m,ref_params_m,ref_acts_m,measured_footprint_mb,"
         "measured_energy_eff\n";
  for (const auto& a : analyses) {
    const auto& t = a.cost.totals;
    const auto ratio = [&](double RatioMetrics::*f) {
      return a.ratios ? num((*a.ratios).*f) : std::string();
    };
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        csv_field(a.name), a.input.channels, a.input.height, a.input.width,
        to_string(options.cost.convention), a.memory.batch,
        to_string(options.memory.mode), options.memory.bytes_per_element,
        t.params, t.activations, t.macs,
        ratio(&RatioMetrics::acts_per_param),
        ratio(&RatioMetrics::macs_per_param),
        ratio(&RatioMetrics::macs_per_act), a.memory.weight_bytes,
        a.memory.peak_activation_bytes, a.memory.gradient_bytes,
        a.memory.fixed_overhead_bytes, a.memory.total_bytes,
        num(a.roofline.intensity), num(a.roofline.ridge_point),
        to_string(a.roofline.bound));
    for (MacBucket b : kBuckets) out += "," + num(a.mac_shares.share(b));
    if (a.reference) {
      out += fmt::format(",{},{},{}", num(a.reference->macs_m),
                         num(a.reference->params_m), num(a.reference->acts_m));
    } else {
      out += ",,,";
    }
    if (a.measurement) {
      out += fmt::format(",{},{}", opt(a.measurement->footprint_mb),
                         opt(a.measurement->energy_eff));
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

std::string render_json(std::span<const ModelAnalysis> analyses,
                        const AnalysisOptions& options) {
  Json doc;
  doc["options"] = {
      {"convention", to_string(options.cost.convention)},
      {"include_bias", options.cost.include_bias},
      {"batch", options.batch},
      {"mode", to_string(options.memory.mode)},
      {"bytes_per_element", options.memory.bytes_per_element},
      {"reuse_buffers", options.memory.reuse_buffers},
      {"inplace_elementwise", options.memory.aliasing.inplace_elementwise},
      {"machine",
       {{"peak_macs_per_second", options.machine.peak_macs_per_second},
        {"peak_bytes_per_second", options.machine.peak_bytes_per_second}}}};
  Json models = Json::array();
  for (const auto& a : analyses) {
    const auto& t = a.cost.totals;
    Json m;
    m["model"] = a.name;
    m["input"] = {{"channels", a.input.channels},
                  {"height", a.input.height},
                  {"width", a.input.width}};
    m["params"] = t.params;
    m["activations"] = t.activations;
    m["macs"] = t.macs;
    if (a.ratios) {
      m["ratios"] = {{"acts_per_param", a.ratios->acts_per_param},
                     {"macs_per_param", a.ratios->macs_per_param},
                     {"macs_per_act", a.ratios->macs_per_act}};
    } else {
      m["ratios"] = nullptr;
    }
    m["memory"] = {
        {"batch", a.memory.batch},
        {"weight_bytes", a.memory.weight_bytes},
        {"peak_activation_bytes", a.memory.peak_activation_bytes},
        {"gradient_bytes", a.memory.gradient_bytes},
        {"fixed_overhead_bytes", a.memory.fixed_overhead_bytes},
        {"total_bytes", a.memory.total_bytes},
        {"activation_elements_per_image",
         a.memory.activation_elements_per_image}};
    m["roofline"] = {{"intensity", finite_or_null(a.roofline.intensity)},
                     {"ridge_point", finite_or_null(a.roofline.ridge_point)},
                     {"bound", to_string(a.roofline.bound)}};
    Json shares = Json::object();
    for (MacBucket b : kBuckets) {
      shares[std::string(to_string(b))] = a.mac_shares.share(b);
    }
    m["mac_share"] = std::move(shares);
    if (a.reference) {
      const auto& r = *a.reference;
      m["reference"] = {{"image_size", r.image_size},
                        {"macs_m", r.macs_m},
                        {"params_m", r.params_m},
                        {"acts_m", r.acts_m},
                        {"acts_per_param", r.acts_per_param},
                        {"macs_per_param", r.macs_per_param},
                        {"macs_per_act", r.macs_per_act}};
    }
    if (a.measurement) {
      const auto& r = *a.measurement;
      m["measured"] = {{"batch", opt_json(r.batch)},
                       {"footprint_mb", opt_json(r.footprint_mb)},
                       {"inference_ms", opt_json(r.inference_ms)},
                       {"energy_eff", opt_json(r.energy_eff)},
                       {"throughput_fps", opt_json(r.throughput_fps)}};
    }
    m["warnings"] = a.warnings;
    Json layers = Json::array();
    for (const auto& l : a.cost.layers) {
      layers.push_back({{"id", l.id},
                        {"kind", to_string(l.kind)},
                        {"params", l.params},
                        {"activations", l.activations},
                        {"macs", l.macs}});
    }
    m["layers"] = std::move(layers);
    models.push_back(std::move(m));
  }
  doc["models"] = std::move(models);
  return doc.dump(2) + "\n";
}

namespace {

struct DeltaRow {
  const char* name;
  const MetricDelta* d;
};

std::vector<DeltaRow> delta_rows(const FactorizationReport& r) {
  return {{"params", &r.params},
          {"activations", &r.activations},
          {"macs", &r.macs},
          {"macs_per_param", &r.macs_per_param},
          {"macs_per_act", &r.macs_per_act}};
}

}  // namespace

std::string render_text(const FactorizationReport& r) {
  std::string out = fmt::format("input {}  output {}\n", shape_text(r.input),
                                shape_text(r.output));
  out += "replacement outputs:";
  for (const auto& s : r.replacement_outputs) out += " " + shape_text(s);
  out += fmt::format("\n\n{:<16} {:>16} {:>16} {:>16} {:>10}\n", "metric",
                     "original", "replacement", "delta", "delta(%)");
  for (const auto& [name, d] : delta_rows(r)) {
    out += fmt::format("{:<16} {:>16.2f} {:>16.2f} {:>16.2f} {:>+10.2f}\n",
                       name, d->original, d->replacement, d->absolute,
                       d->percent);
  }
  return out;
}

std::string render_csv(const FactorizationReport& r) {
  std::string out = "metric,original,replacement,absolute,percent\n";
  for (const auto& [name, d] : delta_rows(r)) {
    out += fmt::format("{},{},{},{},{}\n", name, num(d->original),
                       num(d->replacement), num(d->absolute), num(d->percent));
  }
  return out;
}

std::string render_json(const FactorizationReport& r) {
  const auto shape = [](const TensorShape& s) {
    return Json{{"channels", s.channels}, {"height", s.height}, {"width", s.width}};
  };
  Json doc;
  doc["input"] = shape(r.input);
  doc["output"] = shape(r.output);
  Json outs = Json::array();
  for (const auto& s : r.replacement_outputs) outs.push_back(shape(s));
  doc["replacement_outputs"] = std::move(outs);
  for (const auto& [name, d] : delta_rows(r)) {
    doc[name] = {{"original", d->original},
                 {"replacement", d->replacement},
                 {"absolute", d->absolute},
                 {"percent", d->percent}};
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const CorrelationReport& report) {
  std::string out =
      fmt::format("joined models: {}\n", report.joined_models.size());
  if (!report.unmatched_models.empty()) {
    out += "unmatched:";
    for (const auto& m : report.unmatched_models) out += " " + m;
    out += "\n";
  }
  out += fmt::format("\n{:<20} {:<22} {:>6} {:>8}  {}\n", "x", "y", "pairs",
                     "PPMCC", "note");
  for (const auto& e : report.entries) {
    out += fmt::format("{:<20} {:<22} {:>6} {:>8}  {}\n", e.x, e.y, e.pairs,
                       e.r ? fmt::format("{:.2f}", *e.r) : std::string("n/a"),
                       e.note);
  }
  return out;
}

std::string render_csv(const CorrelationReport& report) {
  std::string out = "x,y,pairs,r,degenerate,note\n";
  for (const auto& e : report.entries) {
    out += fmt::format("{},{},{},{},{},{}\n", csv_field(e.x), csv_field(e.y),
                       e.pairs, opt(e.r), e.degenerate ? "true" : "false",
                       csv_field(e.note));
  }
  return out;
}

std::string render_json(const CorrelationReport& report) {
  Json doc;
  doc["joined_models"] = report.joined_models;
  doc["unmatched_models"] = report.unmatched_models;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"x", e.x},
                       {"y", e.y},
                       {"pairs", e.pairs},
                       {"r", opt_json(e.r)},
                       {"degenerate", e.degenerate},
                       {"note", e.note}});
  }
  doc["correlations"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string render_model_list_text() {
  std::string out = fmt::format("{:<20} {:<12} {:>8} {:>8}\n", "model",
                                "family", "nominal", "built");
  for (const auto& m : list_models()) {
    out += fmt::format("{:<20} {:<12} {:>8} {:>8}\n", to_string(m.id),
                       to_string(m.family), m.nominal_input, m.build_input);
  }
  return out;
}

std::string render_model_list_csv() {
  std::string out = "model,family,nominal_input,build_input\n";
  for (const auto& m : list_models()) {
    out += fmt::format("{},{},{},{}\n", to_string(m.id), to_string(m.family),
                       m.nominal_input, m.build_input);
  }
  return out;
}

std::string render_model_list_json() {
  Json models = Json::array();
  for (const auto& m : list_models()) {
    const auto& r = m.reference;
    models.push_back({{"model", to_string(m.id)},
                      {"family", to_string(m.family)},
                      {"nominal_input", m.nominal_input},
                      {"build_input", m.build_input},
                      {"reference",
                       {{"macs_m", r.macs_m},
                        {"params_m", r.params_m},
                        {"acts_m", r.acts_m},
                        {"acts_per_param", r.acts_per_param},
                        {"macs_per_param", r.macs_per_param},
                        {"macs_per_act", r.macs_per_act}}}});
  }
  return Json{{"models", std::move(models)}}.dump(2) + "\n";
}

}  // namespace dnncost
