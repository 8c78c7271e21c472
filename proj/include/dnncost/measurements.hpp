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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnncost {

/// Reference counts printed alongside measurements (megacounts and ratios as
/// published), used when correlating against fixture data instead of
/// computed costs.
struct ReferenceCounts {
  std::optional<double> macs_m;
  std::optional<double> params_m;
  std::optional<double> acts_m;
  std::optional<double> acts_per_param;
  std::optional<double> macs_per_param;
  std::optional<double> macs_per_act;
};

/// Externally measured quantities for one model. Absent cells stay absent;
/// they are never coerced to zero.
struct MeasurementRecord {
  std::string model_id;
  std::optional<std::int64_t> batch;  // nullopt = unspecified
  std::optional<double> footprint_mb;
  std::optional<double> inference_ms;
  std::optional<double> energy_eff;  // 1e9 MACs per joule
  std::optional<double> throughput_fps;
  std::optional<double> gemv2t_pct;
  std::optional<double> gemv2n_pct;
  std::optional<double> gemmk1_pct;
  ReferenceCounts reference;
  std::string source;
};

/// Column order used when writing; parsing accepts any order by header.
/// Required: model_id. Known optional columns: batch, footprint_mb,
/// inference_ms, energy_eff, throughput_fps, gemv2t_pct, gemv2n_pct,
/// gemmk1_pct, macs_m, params_m, acts_m, acts_per_param, macs_per_param,
/// macs_per_act, source.
const std::vector<std::string_view>& measurement_columns();

/// Throws Error{kCsvSchema} naming the 1-based line of the first problem.
std::vector<MeasurementRecord> parse_measurements_csv(std::string_view text);
std::vector<MeasurementRecord> load_measurements_csv(
    const std::filesystem::path& path);

std::string write_measurements_csv(
    const std::vector<MeasurementRecord>& records);

}  // namespace dnncost
