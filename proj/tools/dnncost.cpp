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

// dnncost: static cost, memory and correlation reports for DNN graphs.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dnncost/cost_model.hpp"
#include "dnncost/error.hpp"
#include "dnncost/measurements.hpp"
#include "dnncost/model_file.hpp"
#include "dnncost/report.hpp"
#include "dnncost/stats.hpp"
#include "dnncost/svg_chart.hpp"
#include "dnncost/zoo.hpp"

namespace {

using namespace dnncost;

enum class Format { kText, kCsv, kJson, kSvg };

struct CommonFlags {
  std::uint64_t batch = 1;
  std::string mode = "inference";
  std::string convention = "all-nodes";
  std::string format = "text";
  std::uint64_t bytes_per_element = 4;
  std::string machine = "4.65e12:7.32e11";
  std::string output;
  bool include_bias = false;
  bool no_inplace = false;
  bool retain_activations = false;
  std::optional<double> width;
  std::string blocks;
  bool grouped = false;
  std::optional<std::int64_t> input_size;
  std::string measurements;
};

[[noreturn]] void bad_arg(const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument, msg);
}

double parse_double(std::string_view s, std::string_view what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  bad_arg(fmt::format("{}: '{}' is not a number", what, s));
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    bad_arg(fmt::format("{}: '{}' is not an integer", what, s));
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  if (s == "svg") return Format::kSvg;
  bad_arg(fmt::format("unknown format '{}'", s));
}

MachineSpec parse_machine(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) bad_arg("--machine expects PEAK_MACS:BANDWIDTH");
  MachineSpec m{parse_double(parts[0], "--machine"),
                parse_double(parts[1], "--machine")};
  check_machine(m);
  return m;
}

AnalysisOptions analysis_options(const CommonFlags& f) {
  AnalysisOptions o;
  if (f.convention == "all-nodes") {
    o.cost.convention = CountingConvention::kAllNodes;
  } else if (f.convention == "weighted-only") {
    o.cost.convention = CountingConvention::kWeightedOnly;
  } else {
    bad_arg(fmt::format("unknown convention '{}'", f.convention));
  }
  o.cost.include_bias = f.include_bias;
  if (f.mode == "inference") {
    o.memory.mode = ExecutionMode::kInference;
  } else if (f.mode == "training") {
    o.memory.mode = ExecutionMode::kTraining;
  } else {
    bad_arg(fmt::format("unknown mode '{}'", f.mode));
  }
  o.memory.bytes_per_element = f.bytes_per_element;
  o.memory.aliasing.inplace_elementwise = !f.no_inplace;
  o.memory.reuse_buffers = !f.retain_activations;
  o.batch = f.batch;
  o.machine = parse_machine(f.machine);
  return o;
}

ZooParams zoo_params(const CommonFlags& f) {
  ZooParams p;
  p.width_multiplier = f.width;
  p.input_size = f.input_size;
  if (f.grouped) p.grouped = true;
  if (!f.blocks.empty()) {
    const auto parts = split(f.blocks, ',');
    if (parts.size() != 4) bad_arg("--blocks expects four comma-separated sizes");
    std::array<int, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) {
      d[i] = static_cast<int>(parse_int(parts[i], "--blocks"));
    }
    p.block_distribution = d;
  }
  return p;
}

ModelAnalysis analyze_ref(const std::string& ref, const CommonFlags& f,
                          const AnalysisOptions& options) {
  if (const auto id = parse_model_id(ref)) {
    return analyze(*id, zoo_params(f), options);
  }
  if (!std::filesystem::exists(ref)) {
    bad_arg(fmt::format("'{}' is neither a zoo model nor a model file", ref));
  }
  ModelFile file = load_model_file(ref);
  if (f.input_size) {
    file.input.height = file.input.width = *f.input_size;
  }
  return analyze(std::filesystem::path(ref).stem().string(), file.graph,
                 file.input, options);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path));
  out << text;
  if (!out) throw Error(ErrorCode::kIo, fmt::format("write to '{}' failed", path));
}

std::string render(std::span<const ModelAnalysis> analyses, Format format,
                   const AnalysisOptions& options, const std::string& chart) {
  switch (format) {
    case Format::kText: return render_text(analyses, options);
    case Format::kCsv: return render_csv(analyses, options);
    case Format::kJson: return render_json(analyses, options);
    case Format::kSvg: {
      ChartLayout layout = ChartLayout::kRatios;
      if (chart == "energy") {
        layout = ChartLayout::kEnergy;
      } else if (chart != "ratios") {
        bad_arg(fmt::format("unknown chart '{}'", chart));
      }
      return render_svg(make_chart(analyses, layout));
    }
  }
  return {};
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--batch", f.batch, "Batch size")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", f.mode, "inference | training");
  cmd->add_option("--convention", f.convention, "all-nodes | weighted-only");
  cmd->add_option("--format", f.format, "text | csv | json | svg");
  cmd->add_option("--bytes-per-element", f.bytes_per_element,
                  "Bytes per stored element (1, 2, 4 or 8)");
  cmd->add_option("--machine", f.machine,
                  "Roofline machine as PEAK_MACS_PER_S:BYTES_PER_S");
  cmd->add_option("--output,-o", f.output, "Write to PATH instead of stdout");
  cmd->add_flag("--include-bias", f.include_bias, "Count conv/FC bias terms");
  cmd->add_flag("--no-inplace", f.no_inplace,
                "Disable in-place reuse for elementwise layers");
  cmd->add_flag("--retain-activations", f.retain_activations,
                "Keep every activation resident (no buffer reuse)");
  cmd->add_option("--width", f.width, "Width multiplier (SqueezeNext, MobileNet)");
  cmd->add_option("--blocks", f.blocks, "SqueezeNext block distribution a,b,c,d");
  cmd->add_flag("--grouped", f.grouped, "SqueezeNext grouped variant");
  cmd->add_option("--input-size", f.input_size, "Square input size override");
  cmd->add_option("--measurements", f.measurements,
                  "Measurement CSV to join by model id");
}

// KHxKW[:m=OUT][:s=STRIDE][:p=PAD][:g=GROUPS]; PAD may be P or PHxPW.
Conv2dAttrs parse_conv_spec(std::string_view spec, std::int64_t default_out) {
  const auto parts = split(spec, ':');
  const auto kernel = split(parts[0], 'x');
  if (kernel.size() != 2) {
    bad_arg(fmt::format("conv spec '{}': kernel must be KHxKW", spec));
  }
  Conv2dAttrs c;
  c.out_channels = default_out;
  c.kernel = {parse_int(kernel[0], "kernel"), parse_int(kernel[1], "kernel")};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.size() < 3 || p[1] != '=') {
      bad_arg(fmt::format("conv spec '{}': bad field '{}'", spec, p));
    }
    const std::string_view value = std::string_view(p).substr(2);
    const auto pair = [&](std::string_view what) -> Extent2 {
      const auto xy = split(value, 'x');
      if (xy.size() == 1) {
        const auto n = parse_int(xy[0], what);
        return {n, n};
      }
      if (xy.size() == 2) return {parse_int(xy[0], what), parse_int(xy[1], what)};
      bad_arg(fmt::format("conv spec '{}': bad {}", spec, what));
    };
    switch (p[0]) {
      case 'm': c.out_channels = parse_int(value, "m"); break;
      case 's': c.stride = pair("stride"); break;
      case 'p': c.padding = pair("padding"); break;
      case 'g': c.groups = parse_int(value, "g"); break;
      default:
        bad_arg(fmt::format("conv spec '{}': unknown field '{}'", spec, p[0]));
    }
  }
  return c;
}

std::vector<ModelCounts> counts_for(const std::vector<MeasurementRecord>& records,
                                    const std::string& source,
                                    const CostOptions& cost) {
  if (source != "auto" && source != "fixture" && source != "computed") {
    bad_arg(fmt::format("unknown --costs '{}'", source));
  }
  std::vector<ModelCounts> counts;
  for (const auto& r : records) {
    const auto& ref = r.reference;
    const bool has_fixture = ref.params_m && ref.acts_m && ref.macs_m;
    const bool use_fixture =
        source == "fixture" || (source == "auto" && has_fixture);
    if (use_fixture) {
      if (!has_fixture) {
        throw Error(ErrorCode::kCsvSchema,
                    fmt::format("{} has no macs_m/params_m/acts_m columns",
                                r.model_id));
      }
      counts.push_back({r.model_id, *ref.params_m * 1e6, *ref.acts_m * 1e6,
                        *ref.macs_m * 1e6});
      continue;
    }
    const auto id = parse_model_id(r.model_id);
    if (!id) continue;  // reported as unmatched
    const BuiltModel built = build(*id);
    const auto shapes = infer_graph(built.graph, built.input);
    const auto totals = model_cost(built.graph, shapes, cost).totals;
    counts.push_back({r.model_id, static_cast<double>(totals.params),
                      static_cast<double>(totals.activations),
                      static_cast<double>(totals.macs)});
  }
  return counts;
}

int run(int argc, char** argv) {
  CLI::App app{"Static cost, memory and correlation analysis for DNN graphs"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List the built-in models");
  list->add_option("--format", list_format, "text | csv | json");

  std::string model_ref;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one model");
  analyze_cmd->add_option("model", model_ref, "Zoo model name or model file")
      ->required();
  add_common(analyze_cmd, flags);

  std::vector<std::string> refs;
  std::string chart = "ratios";
  auto* compare_cmd = app.add_subcommand("compare", "Compare models side by side");
  compare_cmd->add_option("models", refs, "Zoo names, model files, or 'all'")
      ->required();
  compare_cmd->add_option("--chart", chart, "SVG layout: ratios | energy");
  add_common(compare_cmd, flags);

  std::string csv_path;
  std::string costs = "auto";
  auto* correlate_cmd =
      app.add_subcommand("correlate", "Correlate counts with measurements");
  correlate_cmd->add_option("measurements", csv_path, "Measurement CSV")
      ->required();
  correlate_cmd->add_option("--costs", costs,
                            "auto | fixture | computed count source");
  correlate_cmd->add_option("--format", flags.format, "text | csv | json");
  correlate_cmd->add_option("--bytes-per-element", flags.bytes_per_element,
                            "Bytes per parameter for model size");
  correlate_cmd->add_option("--output,-o", flags.output, "Output path");

  std::string original = "5x5";
  std::string replace = "3x3,3x3";
  std::int64_t fsize = 224;
  std::int64_t fchannels = 1;
  auto* factorize_cmd = app.add_subcommand(
      "factorize", "Compare a convolution with a factorized chain");
  factorize_cmd->add_option("--original", original,
                            "KHxKW[:m=OUT][:s=S][:p=P][:g=G]");
  factorize_cmd->add_option("--replace", replace, "Comma-separated conv chain");
  factorize_cmd->add_option("--input-size", fsize, "Square input extent");
  factorize_cmd->add_option("--in-channels", fchannels, "Input channels");
  factorize_cmd->add_flag("--include-bias", flags.include_bias, "Count bias");
  factorize_cmd->add_option("--format", flags.format, "text | csv | json");
  factorize_cmd->add_option("--output,-o", flags.output, "Output path");

  std::string export_ref;
  auto* export_cmd =
      app.add_subcommand("export", "Write a model as a canonical model file");
  export_cmd->add_option("model", export_ref, "Zoo model name or model file")
      ->required();
  export_cmd->add_option("--width", flags.width, "Width multiplier");
  export_cmd->add_option("--blocks", flags.blocks, "SqueezeNext blocks");
  export_cmd->add_flag("--grouped", flags.grouped, "SqueezeNext grouped");
  export_cmd->add_option("--input-size", flags.input_size, "Input size");
  export_cmd->add_option("--output,-o", flags.output, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "dnncost: error: invalid-argument: " << e.what() << "\n";
    return 2;
  }

  if (*list) {
    if (list_format == "text") {
      emit(render_model_list_text(), "");
    } else if (list_format == "csv") {
      emit(render_model_list_csv(), "");
    } else if (list_format == "json") {
      emit(render_model_list_json(), "");
    } else {
      bad_arg(fmt::format("unknown format '{}'", list_format));
    }
    return 0;
  }

  if (*analyze_cmd || *compare_cmd) {
    const AnalysisOptions options = analysis_options(flags);
    const Format format = parse_format(flags.format);
    std::vector<ModelAnalysis> analyses;
    if (*analyze_cmd) {
      analyses.push_back(analyze_ref(model_ref, flags, options));
    } else {
      std::vector<std::string> expanded;
      for (const auto& r : refs) {
        if (r == "all") {
          for (const auto& m : list_models()) {
            expanded.emplace_back(to_string(m.id));
          }
        } else {
          expanded.push_back(r);
        }
      }
      if (expanded.size() < 2) bad_arg("compare needs at least two models");
      for (const auto& r : expanded) {
        analyses.push_back(analyze_ref(r, flags, options));
      }
    }
    if (!flags.measurements.empty()) {
      attach_measurements(analyses, load_measurements_csv(flags.measurements));
    }
    emit(render(analyses, format, options, chart), flags.output);
    return 0;
  }

  if (*correlate_cmd) {
    const auto records = load_measurements_csv(csv_path);
    const auto counts = counts_for(records, costs, CostOptions{});
    const auto report = correlation_suite(
        counts, records, static_cast<double>(flags.bytes_per_element));
    switch (parse_format(flags.format)) {
      case Format::kText: emit(render_text(report), flags.output); break;
      case Format::kCsv: emit(render_csv(report), flags.output); break;
      case Format::kJson: emit(render_json(report), flags.output); break;
      case Format::kSvg: bad_arg("correlate has no svg output");
    }
    return 0;
  }

  if (*factorize_cmd) {
    const Conv2dAttrs orig = parse_conv_spec(original, fchannels);
    std::vector<Conv2dAttrs> chain;
    std::int64_t channels = fchannels;
    for (const auto& s : split(replace, ',')) {
      chain.push_back(parse_conv_spec(s, channels));
      channels = chain.back().out_channels;
    }
    const auto report = factorization_compare(
        orig, chain, TensorShape{fchannels, fsize, fsize}, flags.include_bias);
    switch (parse_format(flags.format)) {
      case Format::kText: emit(render_text(report), flags.output); break;
      case Format::kCsv: emit(render_csv(report), flags.output); break;
      case Format::kJson: emit(render_json(report), flags.output); break;
      case Format::kSvg: bad_arg("factorize has no svg output");
    }
    return 0;
  }

  if (*export_cmd) {
    if (const auto id = parse_model_id(export_ref)) {
      const BuiltModel built = build(*id, zoo_params(flags));
      for (const auto& w : built.warnings) {
        std::cerr << "dnncost: warning: " << w << "\n";
      }
      emit(serialize_model_file(built.graph, built.input), flags.output);
    } else {
      ModelFile file = load_model_file(export_ref);
      if (flags.input_size) {
        file.input.height = file.input.width = *flags.input_size;
      }
      emit(serialize_model_file(file), flags.output);
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dnncost::Error& e) {
    std::cerr << "dnncost: error: " << dnncost::to_string(e.code()) << ": "
              << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "dnncost: error: internal: " << e.what() << "\n";
  }
  return 1;
}
