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
#include <vector>

#include "dnncost/cost_model.hpp"
#include "dnncost/graph.hpp"
#include "dnncost/measurements.hpp"
#include "dnncost/memory_model.hpp"
#include "dnncost/stats.hpp"
#include "dnncost/zoo.hpp"

namespace dnncost {

struct AnalysisOptions {
  CostOptions cost;
  MemoryConfig memory;
  std::uint64_t batch = 1;
  // Defaults approximate a V100-class GPU: 4.65e12 FMA/s, 732 GB/s.
  MachineSpec machine{4.65e12, 7.32e11};
};

struct ModelAnalysis {
  std::string name;
  TensorShape input;
  ModelCost cost;
  std::optional<RatioMetrics> ratios;  // absent when params or acts is zero
  MemoryEstimate memory;
  RooflineResult roofline;
  MacBreakdown mac_shares;
  std::optional<ReferenceRow> reference;        // zoo models only
  std::optional<MeasurementRecord> measurement;  // joined from a CSV
  std::vector<std::string> warnings;
};

/// Validate -> infer -> cost -> memory -> roofline.
ModelAnalysis analyze(std::string name, const Graph& graph,
                      const TensorShape& input, const AnalysisOptions& options);

/// Builds a zoo model and analyzes it, attaching its reference row.
ModelAnalysis analyze(ModelId id, const ZooParams& params,
                      const AnalysisOptions& options);

/// Attaches the record whose model_id matches each analysis, if any.
void attach_measurements(std::span<ModelAnalysis> analyses,
                         std::span<const MeasurementRecord> records);

/// Megacounts and two-decimal ratios; MB here means 2^20 bytes.
std::string render_text(std::span<const ModelAnalysis> analyses,
                        const AnalysisOptions& options);
/// Raw integer counts and bytes, shortest round-trip doubles.
std::string render_csv(std::span<const ModelAnalysis> analyses,
                       const AnalysisOptions& options);
std::string render_json(std::span<const ModelAnalysis> analyses,
                        const AnalysisOptions& options);

std::string render_text(const FactorizationReport& report);
std::string render_csv(const FactorizationReport& report);
std::string render_json(const FactorizationReport& report);

std::string render_text(const CorrelationReport& report);
std::string render_csv(const CorrelationReport& report);
std::string render_json(const CorrelationReport& report);

/// Zoo listing.
std::string render_model_list_text();
std::string render_model_list_csv();
std::string render_model_list_json();

}  // namespace dnncost
