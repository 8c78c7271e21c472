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

#include "dnncost/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include <fmt/format.h>

#include "dnncost/error.hpp"

namespace dnncost {

double ppmcc(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("length mismatch ({} vs {})", xs.size(),
                            ys.size()));
  }
  const std::size_t n = xs.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "ppmcc needs at least 2 points");
  }
  // Two-pass centered sums. The 1/n (or 1/(n-1)) normalizations cancel, so
  // the population and sample forms give the same r.
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  // Deviations are scaled to unit max so tiny or huge inputs do not under-
  // or overflow when squared.
  double ax = 0.0, ay = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ax = std::max(ax, std::abs(xs[i] - mx));
    ay = std::max(ay, std::abs(ys[i] - my));
  }
  if (ax == 0.0 || ay == 0.0) {
    throw Error(ErrorCode::kZeroVariance, "ppmcc undefined: constant input");
  }
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = (xs[i] - mx) / ax;
    const double dy = (ys[i] - my) / ay;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double footprint_to_modelsize_ratio(double footprint_mb, double params,
                                    double bytes_per_param) {
  if (params == 0.0 || bytes_per_param == 0.0) {
    throw Error(ErrorCode::kZeroDenominator, "model size is zero");
  }
  return footprint_mb / (params * bytes_per_param / 1e6);
}

const CorrelationEntry& CorrelationReport::entry(std::string_view x,
                                                 std::string_view y) const {
  for (const auto& e : entries) {
    if (e.x == x && e.y == y) return e;
  }
  throw Error(ErrorCode::kInvalidArgument,
              fmt::format("no correlation entry ({}, {})", x, y));
}

namespace {

struct Joined {
  const ModelCounts* counts;
  const MeasurementRecord* record;
};

using Extract = std::function<std::optional<double>(const Joined&)>;

CorrelationEntry correlate(const std::vector<Joined>& rows, std::string x,
                           std::string y, const Extract& fx,
                           const Extract& fy) {
  std::vector<double> xs, ys;
  for (const Joined& j : rows) {
    const auto vx = fx(j);
    const auto vy = fy(j);
    if (vx && vy) {
      xs.push_back(*vx);
      ys.push_back(*vy);
    }
  }
  CorrelationEntry e{std::move(x), std::move(y), xs.size(), std::nullopt,
                     xs.size() == 2, ""};
  if (xs.size() < 2) {
    e.note = "fewer than two complete pairs";
    return e;
  }
  try {
    e.r = ppmcc(xs, ys);
  } catch (const Error& err) {
    e.note = err.what();
  }
  if (e.degenerate) e.note = "two points: r is trivially +/-1";
  return e;
}

}  // namespace

CorrelationReport correlation_suite(std::span<const ModelCounts> counts,
                                    std::span<const MeasurementRecord> records,
                                    double bytes_per_param) {
  std::unordered_map<std::string, const ModelCounts*> by_id;
  for (const ModelCounts& c : counts) by_id.emplace(c.model_id, &c);

  CorrelationReport report;
  std::vector<Joined> rows;
  for (const MeasurementRecord& r : records) {
    auto it = by_id.find(r.model_id);
    if (it == by_id.end()) {
      report.unmatched_models.push_back(r.model_id);
      continue;
    }
    rows.push_back({it->second, &r});
    report.joined_models.push_back(r.model_id);
  }
  if (rows.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                fmt::format("need at least 2 models with both costs and "
                            "measurements, found {}",
                            rows.size()));
  }

  const Extract params = [](const Joined& j) -> std::optional<double> {
    return j.counts->params;
  };
  const Extract acts = [](const Joined& j) -> std::optional<double> {
    return j.counts->activations;
  };
  const Extract params_plus_acts = [](const Joined& j) -> std::optional<double> {
    return j.counts->params + j.counts->activations;
  };
  const auto ratio = [](double num, double den) -> std::optional<double> {
    if (den == 0.0) return std::nullopt;
    return num / den;
  };
  const Extract acts_per_param = [&](const Joined& j) {
    return ratio(j.counts->activations, j.counts->params);
  };
  const Extract macs_per_param = [&](const Joined& j) {
    return ratio(j.counts->macs, j.counts->params);
  };
  const Extract macs_per_act = [&](const Joined& j) {
    return ratio(j.counts->macs, j.counts->activations);
  };
  const Extract footprint = [](const Joined& j) {
    return j.record->footprint_mb;
  };
  const Extract footprint_ratio =
      [bytes_per_param](const Joined& j) -> std::optional<double> {
    if (!j.record->footprint_mb || j.counts->params == 0.0) return std::nullopt;
    return footprint_to_modelsize_ratio(*j.record->footprint_mb,
                                        j.counts->params, bytes_per_param);
  };
  const Extract energy = [](const Joined& j) { return j.record->energy_eff; };

  report.entries.push_back(
      correlate(rows, "params", "footprint", params, footprint));
  report.entries.push_back(
      correlate(rows, "activations", "footprint", acts, footprint));
  report.entries.push_back(correlate(rows, "params+activations", "footprint",
                                     params_plus_acts, footprint));
  report.entries.push_back(correlate(rows, "activations/params",
                                     "footprint/model-size", acts_per_param,
                                     footprint_ratio));
  report.entries.push_back(correlate(rows, "energy-efficiency", "macs/params",
                                     energy, macs_per_param));
  report.entries.push_back(correlate(rows, "energy-efficiency",
                                     "macs/activations", energy,
                                     macs_per_act));
  return report;
}

void check_machine(const MachineSpec& machine) {
  if (!(machine.peak_macs_per_second >= 0.0) ||
      !std::isfinite(machine.peak_macs_per_second)) {
    throw Error(ErrorCode::kInvalidArgument,
                "peak MAC rate must be finite and non-negative");
  }
  if (!(machine.peak_bytes_per_second > 0.0) ||
      !std::isfinite(machine.peak_bytes_per_second)) {
    throw Error(ErrorCode::kInvalidArgument,
                "peak bandwidth must be finite and positive");
  }
}

std::string_view to_string(Boundedness b) {
  return b == Boundedness::kComputeBound ? "compute-bound" : "bandwidth-bound";
}

RooflineResult roofline_classify(const CostTotals& totals,
                                 std::uint64_t bytes_per_element,
                                 const MachineSpec& machine) {
  check_machine(machine);
  RooflineResult r;
  r.ridge_point = machine.ridge_point();
  const double traffic = static_cast<double>(totals.params + totals.activations) *
                         static_cast<double>(bytes_per_element);
  r.intensity = traffic > 0.0 ? static_cast<double>(totals.macs) / traffic
                              : std::numeric_limits<double>::infinity();
  r.bound = r.intensity >= r.ridge_point ? Boundedness::kComputeBound
                                         : Boundedness::kBandwidthBound;
  return r;
}

}  // namespace dnncost
