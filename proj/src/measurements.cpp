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

#include "dnncost/measurements.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dnncost/error.hpp"

namespace dnncost {
namespace {

enum class Column {
  kModelId,
  kBatch,
  kFootprintMb,
  kInferenceMs,
  kEnergyEff,
  kThroughputFps,
  kGemv2tPct,
  kGemv2nPct,
  kGemmk1Pct,
  kMacsM,
  kParamsM,
  kActsM,
  kActsPerParam,
  kMacsPerParam,
  kMacsPerAct,
  kSource,
};

const std::vector<std::string_view> kColumns = {
    "model_id",   "batch",          "footprint_mb",   "inference_ms",
    "energy_eff", "throughput_fps", "gemv2t_pct",     "gemv2n_pct",
    "gemmk1_pct", "macs_m",         "params_m",       "acts_m",
    "acts_per_param", "macs_per_param", "macs_per_act", "source"};

[[noreturn]] void schema_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kCsvSchema, fmt::format("line {}: {}", line, what));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// RFC 4180 subset: double-quoted fields with "" escapes, no embedded newlines.
std::vector<std::string> split_row(std::string_view line, std::size_t lineno) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::string(trim(cur)));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) schema_error(lineno, "unterminated quoted field");
  cells.push_back(std::string(trim(cur)));
  return cells;
}

std::optional<double> parse_real(const std::string& cell, std::size_t line,
                                 std::string_view column) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    schema_error(line, fmt::format("column '{}': '{}' is not a number", column,
                                   cell));
  }
  return v;
}

std::optional<double> parse_percent(const std::string& cell, std::size_t line,
                                    std::string_view column) {
  auto v = parse_real(cell, line, column);
  if (v && (*v < 0.0 || *v > 100.0)) {
    schema_error(line, fmt::format("column '{}': {} is outside [0, 100]",
                                   column, *v));
  }
  return v;
}

std::optional<std::int64_t> parse_batch(const std::string& cell,
                                        std::size_t line) {
  if (cell.empty() || cell == "unspecified") return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || v < 1) {
    schema_error(line, fmt::format("column 'batch': '{}' is not a positive "
                                   "integer or 'unspecified'",
                                   cell));
  }
  return v;
}

std::string format_real(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const std::vector<std::string_view>& measurement_columns() { return kColumns; }

std::vector<MeasurementRecord> parse_measurements_csv(std::string_view text) {
  std::vector<MeasurementRecord> out;
  std::vector<Column> header;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(begin, end - begin);
    begin = end + 1;
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto cells = split_row(line, lineno);
    if (header.empty()) {
      bool has_id = false;
      for (const auto& name : cells) {
        auto it = std::find(kColumns.begin(), kColumns.end(), name);
        if (it == kColumns.end()) {
          schema_error(lineno, fmt::format("unknown column '{}'", name));
        }
        const auto col = static_cast<Column>(it - kColumns.begin());
        if (std::find(header.begin(), header.end(), col) != header.end()) {
          schema_error(lineno, fmt::format("duplicate column '{}'", name));
        }
        has_id = has_id || col == Column::kModelId;
        header.push_back(col);
      }
      if (!has_id) schema_error(lineno, "missing required column 'model_id'");
      if (end == text.size()) break;
      continue;
    }
    if (cells.size() != header.size()) {
      schema_error(lineno, fmt::format("expected {} cells, found {}",
                                       header.size(), cells.size()));
    }
    MeasurementRecord r;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const std::string& cell = cells[k];
      const std::string_view name = kColumns[static_cast<std::size_t>(header[k])];
      switch (header[k]) {
        case Column::kModelId:
          if (cell.empty()) schema_error(lineno, "empty model_id");
          r.model_id = cell;
          break;
        case Column::kBatch: r.batch = parse_batch(cell, lineno); break;
        case Column::kFootprintMb: r.footprint_mb = parse_real(cell, lineno, name); break;
        case Column::kInferenceMs: r.inference_ms = parse_real(cell, lineno, name); break;
        case Column::kEnergyEff: r.energy_eff = parse_real(cell, lineno, name); break;
        case Column::kThroughputFps: r.throughput_fps = parse_real(cell, lineno, name); break;
        case Column::kGemv2tPct: r.gemv2t_pct = parse_percent(cell, lineno, name); break;
        case Column::kGemv2nPct: r.gemv2n_pct = parse_percent(cell, lineno, name); break;
        case Column::kGemmk1Pct: r.gemmk1_pct = parse_percent(cell, lineno, name); break;
        case Column::kMacsM: r.reference.macs_m = parse_real(cell, lineno, name); break;
        case Column::kParamsM: r.reference.params_m = parse_real(cell, lineno, name); break;
        case Column::kActsM: r.reference.acts_m = parse_real(cell, lineno, name); break;
        case Column::kActsPerParam: r.reference.acts_per_param = parse_real(cell, lineno, name); break;
        case Column::kMacsPerParam: r.reference.macs_per_param = parse_real(cell, lineno, name); break;
        case Column::kMacsPerAct: r.reference.macs_per_act = parse_real(cell, lineno, name); break;
        case Column::kSource: r.source = cell; break;
      }
    }
    out.push_back(std::move(r));
    if (end == text.size()) break;
  }
  if (header.empty()) schema_error(lineno == 0 ? 1 : lineno, "missing header");
  return out;
}

std::vector<MeasurementRecord> load_measurements_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_measurements_csv(ss.str());
}

std::string write_measurements_csv(
    const std::vector<MeasurementRecord>& records) {
  std::string out;
  for (std::size_t k = 0; k < kColumns.size(); ++k) {
    if (k) out += ',';
    out += kColumns[k];
  }
  out += '\n';
  for (const auto& r : records) {
    const std::vector<std::string> cells = {
        quote_if_needed(r.model_id),
        r.batch ? std::to_string(*r.batch) : std::string("unspecified"),
        format_real(r.footprint_mb),
        format_real(r.inference_ms),
        format_real(r.energy_eff),
        format_real(r.throughput_fps),
        format_real(r.gemv2t_pct),
        format_real(r.gemv2n_pct),
        format_real(r.gemmk1_pct),
        format_real(r.reference.macs_m),
        format_real(r.reference.params_m),
        format_real(r.reference.acts_m),
        format_real(r.reference.acts_per_param),
        format_real(r.reference.macs_per_param),
        format_real(r.reference.macs_per_act),
        quote_if_needed(r.source)};
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  }
  return out;
}

}  // namespace dnncost
