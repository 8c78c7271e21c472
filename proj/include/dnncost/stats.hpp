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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnncost/cost_model.hpp"
#include "dnncost/measurements.hpp"

namespace dnncost {

/// Pearson product-moment correlation. Throws Error{kInvalidArgument} on
/// mismatched or too-short inputs and Error{kZeroVariance} when either side
/// is constant.
double ppmcc(std::span<const double> xs, std::span<const double> ys);

/// footprint_mb / (params * bytes_per_param / 1e6). Throws
/// Error{kZeroDenominator} when params is zero.
double footprint_to_modelsize_ratio(double footprint_mb, double params,
                                    double bytes_per_param = 4.0);

/// Per-model counts to correlate against measurements.
struct ModelCounts {
  std::string model_id;
  double params = 0.0;
  double activations = 0.0;
  double macs = 0.0;
};

struct CorrelationEntry {
  std::string x;
  std::string y;
  std::size_t pairs = 0;
  std::optional<double> r;  // nullopt when undefined (constant side)
  bool degenerate = false;  // two points are always collinear
  std::string note;
};

struct CorrelationReport {
  std::vector<std::string> joined_models;
  std::vector<std::string> unmatched_models;
  std::vector<CorrelationEntry> entries;

  const CorrelationEntry& entry(std::string_view x, std::string_view y) const;
};

/// Joins counts and measurements on model id (measurement order) and reports
/// PPMCC for (params, footprint), (acts, footprint), (params + acts,
/// footprint), (acts/params, footprint/model-size), (energy, MACs/param) and
/// (energy, MACs/act). Throws Error{kInsufficientData} when fewer than two
/// models join.
CorrelationReport correlation_suite(std::span<const ModelCounts> counts,
                                    std::span<const MeasurementRecord> records,
                                    double bytes_per_param = 4.0);

struct MachineSpec {
  double peak_macs_per_second = 0.0;
  double peak_bytes_per_second = 0.0;

  double ridge_point() const {
    return peak_macs_per_second / peak_bytes_per_second;
  }
};

/// Throws Error{kInvalidArgument} unless both rates are positive and finite,
/// with one exception: a zero MAC rate is accepted (ridge point 0).
void check_machine(const MachineSpec& machine);

enum class Boundedness { kComputeBound, kBandwidthBound };

std::string_view to_string(Boundedness b);

struct RooflineResult {
  double intensity = 0.0;  // MACs per byte of lower-bound traffic
  double ridge_point = 0.0;
  Boundedness bound = Boundedness::kComputeBound;
};

/// Traffic reads every parameter and every activation once. An intensity
/// exactly at the ridge point classifies as compute-bound.
RooflineResult roofline_classify(const CostTotals& totals,
                                 std::uint64_t bytes_per_element,
                                 const MachineSpec& machine);

}  // namespace dnncost
