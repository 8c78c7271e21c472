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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnncost/report.hpp"

namespace dnncost {

struct ChartSeries {
  std::string label;
  bool right_axis = false;
  std::vector<double> values;  // one per category
};

struct BarChart {
  std::string title;
  std::string left_label;
  std::string right_label;
  std::vector<std::string> categories;
  std::vector<ChartSeries> series;
};

/// Grouped bars against two independent y axes, one <g class="model"> per
/// category. Output depends only on the input.
std::string render_svg(const BarChart& chart);

enum class ChartLayout {
  kRatios,  // acts/params (left) vs footprint/model-size (right)
  kEnergy,  // energy efficiency (left) vs MACs/param and MACs/act (right)
};

/// The ratios layout uses a measured footprint where one is attached and the
/// estimated total otherwise. The energy layout needs measurements; throws
/// Error{kInvalidArgument} for any model without an energy figure.
BarChart make_chart(std::span<const ModelAnalysis> analyses, ChartLayout layout);

}  // namespace dnncost
