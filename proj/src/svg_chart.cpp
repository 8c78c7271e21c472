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

#include "dnncost/svg_chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "dnncost/error.hpp"
#include "dnncost/stats.hpp"

namespace dnncost {
namespace {

constexpr double kMarginLeft = 80;
constexpr double kMarginRight = 80;
constexpr double kMarginTop = 60;
constexpr double kMarginBottom = 150;
constexpr double kPlotHeight = 320;
constexpr double kGroupWidth = 60;
constexpr double kBarGap = 2;
constexpr int kTicks = 5;
constexpr std::array<const char*, 6> kColors{
    "#4e79a7", "#e15759", "#59a14f", "#f28e2b", "#76b7b2", "#b07aa1"};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Rounds up to 1, 2 or 5 times a power of ten.
double nice_max(double v) {
  if (!(v > 0) || !std::isfinite(v)) return 1.0;
  const double p = std::pow(10.0, std::floor(std::log10(v)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (v <= m * p) return m * p;
  }
  return 10.0 * p;
}

double axis_max(const BarChart& chart, bool right) {
  double m = 0.0;
  for (const auto& s : chart.series) {
    if (s.right_axis != right) continue;
    for (double v : s.values) {
      if (std::isfinite(v)) m = std::max(m, v);
    }
  }
  return nice_max(m);
}

}  // namespace

std::string render_svg(const BarChart& chart) {
  for (const auto& s : chart.series) {
    if (s.values.size() != chart.categories.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("series '{}' has {} values for {} categories",
                              s.label, s.values.size(),
                              chart.categories.size()));
    }
  }
  const double plot_w = kGroupWidth * static_cast<double>(chart.categories.size());
  const double width = kMarginLeft + plot_w + kMarginRight;
  const double height = kMarginTop + kPlotHeight + kMarginBottom;
  const double base = kMarginTop + kPlotHeight;
  const double left_max = axis_max(chart, false);
  const double right_max = axis_max(chart, true);
  const double right_x = kMarginLeft + plot_w;

  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" "
      "height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n",
      width, height);
  out += fmt::format(
      "<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" "
      "font-size=\"14\">{}</text>\n",
      width / 2, escape(chart.title));

  // Axes and gridlines.
  out += "<g class=\"axes\" stroke=\"#333\" fill=\"none\">\n";
  out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" "
                     "y2=\"{2:.1f}\"/>\n",
                     kMarginLeft, kMarginTop, base);
  out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" "
                     "y2=\"{2:.1f}\"/>\n",
                     right_x, kMarginTop, base);
  out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{2:.1f}\" x2=\"{1:.1f}\" "
                     "y2=\"{2:.1f}\"/>\n",
                     kMarginLeft, right_x, base);
  out += "</g>\n<g class=\"ticks\" fill=\"#333\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double frac = static_cast<double>(i) / kTicks;
    const double y = base - frac * kPlotHeight;
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:g}</text>\n",
        kMarginLeft - 6, y + 4, left_max * frac);
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"start\">{:g}</text>\n",
        right_x + 6, y + 4, right_max * frac);
  }
  out += "</g>\n";
  out += fmt::format(
      "<text class=\"axis-label\" transform=\"translate({:.1f},{:.1f}) "
      "rotate(-90)\" text-anchor=\"middle\">{}</text>\n",
      kMarginLeft - 55, kMarginTop + kPlotHeight / 2, escape(chart.left_label));
  out += fmt::format(
      "<text class=\"axis-label\" transform=\"translate({:.1f},{:.1f}) "
      "rotate(90)\" text-anchor=\"middle\">{}</text>\n",
      right_x + 55, kMarginTop + kPlotHeight / 2, escape(chart.right_label));

  const std::size_t n_series = std::max<std::size_t>(1, chart.series.size());
  const double bar_w =
      (kGroupWidth - 2 * kBarGap * 2) / static_cast<double>(n_series);
  for (std::size_t c = 0; c < chart.categories.size(); ++c) {
    const double x0 = kMarginLeft + kGroupWidth * static_cast<double>(c);
    out += fmt::format("<g class=\"model\" data-model=\"{}\">\n",
                       escape(chart.categories[c]));
    for (std::size_t s = 0; s < chart.series.size(); ++s) {
      const auto& series = chart.series[s];
      const double scale = series.right_axis ? right_max : left_max;
      const double v = series.values[c];
      const double h =
          std::isfinite(v) ? std::clamp(v / scale, 0.0, 1.0) * kPlotHeight
                           : 0.0;
      out += fmt::format(
          "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
          "fill=\"{}\"><title>{}: {:.2f}</title></rect>\n",
          x0 + 2 * kBarGap + bar_w * static_cast<double>(s), base - h, bar_w,
          h, kColors[s % kColors.size()], escape(series.label), v);
    }
    const double cx = x0 + kGroupWidth / 2;
    out += fmt::format(
        "<text transform=\"translate({:.1f},{:.1f}) rotate(-45)\" "
        "text-anchor=\"end\">{}</text>\n</g>\n",
        cx, base + 14, escape(chart.categories[c]));
  }

  out += "<g class=\"legend\">\n";
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const double y = 36 + 14 * static_cast<double>(s);
    out += fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"10\" height=\"10\" "
        "fill=\"{}\"/>\n<text x=\"{:.1f}\" y=\"{:.1f}\">{} ({} axis)</text>\n",
        kMarginLeft + 10, y, kColors[s % kColors.size()], kMarginLeft + 24,
        y + 9, escape(chart.series[s].label),
        chart.series[s].right_axis ? "right" : "left");
  }
  out += "</g>\n</svg>\n";
  return out;
}

BarChart make_chart(std::span<const ModelAnalysis> analyses,
                    ChartLayout layout) {
  BarChart chart;
  for (const auto& a : analyses) chart.categories.push_back(a.name);
  const auto ratio = [](const ModelAnalysis& a, double RatioMetrics::*f) {
    if (!a.ratios) {
      throw Error(ErrorCode::kZeroDenominator,
                  fmt::format("{} has no parameter/activation ratios", a.name));
    }
    return (*a.ratios).*f;
  };

  if (layout == ChartLayout::kRatios) {
    chart.title = "Activations/Parameters and footprint/model-size";
    chart.left_label = "activations / parameters";
    chart.right_label = "memory footprint / model size";
    ChartSeries left{"activations/parameters", false, {}};
    ChartSeries right{"footprint/model-size", true, {}};
    for (const auto& a : analyses) {
      left.values.push_back(ratio(a, &RatioMetrics::acts_per_param));
      const double params = static_cast<double>(a.cost.totals.params);
      if (a.measurement && a.measurement->footprint_mb) {
        right.values.push_back(
            footprint_to_modelsize_ratio(*a.measurement->footprint_mb, params));
      } else {
        right.values.push_back(static_cast<double>(a.memory.total_bytes) /
                               static_cast<double>(a.memory.weight_bytes));
      }
    }
    chart.series = {std::move(left), std::move(right)};
    return chart;
  }

  chart.title = "Energy efficiency vs MACs/parameter and MACs/activation";
  chart.left_label = "energy efficiency (GMACs/J)";
  chart.right_label = "MACs ratio";
  ChartSeries energy{"energy efficiency", false, {}};
  ChartSeries per_param{"MACs/parameter", true, {}};
  ChartSeries per_act{"MACs/activation", true, {}};
  for (const auto& a : analyses) {
    if (!a.measurement || !a.measurement->energy_eff) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("no energy measurement for {}", a.name));
    }
    energy.values.push_back(*a.measurement->energy_eff);
    per_param.values.push_back(ratio(a, &RatioMetrics::macs_per_param));
    per_act.values.push_back(ratio(a, &RatioMetrics::macs_per_act));
  }
  chart.series = {std::move(energy), std::move(per_param), std::move(per_act)};
  return chart;
}

}  // namespace dnncost
