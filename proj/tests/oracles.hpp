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

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with src/.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace dnncost::oracle {

/// Counts window placements along one axis by walking them. The ceil variant
/// keeps a trailing partial window only if it starts inside the input or the
/// leading padding (requires pad < kernel).
inline std::int64_t window_count(std::int64_t in, std::int64_t k,
                                 std::int64_t s, std::int64_t p, bool ceil) {
  const std::int64_t padded = in + 2 * p;
  std::int64_t n = 0;
  for (std::int64_t start = 0;; start += s) {
    const bool full = start + k <= padded;
    const bool partial = ceil && start + k > padded &&
                         start - s + k < padded;
    if (!full && !partial) break;
    if (ceil && p > 0 && start >= in + p) break;
    ++n;
  }
  return n;
}

/// Multiply-accumulates of a (grouped) convolution by visiting every output
/// element and every tap that feeds it.
inline std::uint64_t conv_macs_by_loops(std::int64_t in_c, std::int64_t out_c,
                                        std::int64_t kh, std::int64_t kw,
                                        std::int64_t oh, std::int64_t ow,
                                        std::int64_t groups) {
  std::uint64_t macs = 0;
  const std::int64_t per_group = in_c / groups;
  for (std::int64_t m = 0; m < out_c; ++m) {
    for (std::int64_t y = 0; y < oh; ++y) {
      for (std::int64_t x = 0; x < ow; ++x) {
        for (std::int64_t c = 0; c < per_group; ++c) {
          for (std::int64_t i = 0; i < kh; ++i) {
            for (std::int64_t j = 0; j < kw; ++j) ++macs;
          }
        }
      }
    }
  }
  return macs;
}

/// Textbook single-pass Pearson r in long double.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const long double n = static_cast<long double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  const long double num = n * sxy - sx * sy;
  const long double den =
      std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy);
  return static_cast<double>(num / den);
}

/// Peak resident elements of a schedule, evaluated step by step with explicit
/// live sets. A node may reuse a producer's buffer when it is allowed to, the
/// producer is not an output, the node is that producer's last reader, and
/// the buffer is large enough; the first qualifying producer wins.
struct LivenessCase {
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<std::size_t>> producers;
  std::vector<bool> outputs;
  std::vector<bool> may_alias;
};

inline std::uint64_t brute_force_peak(const LivenessCase& c,
                                      const std::vector<std::size_t>& order) {
  const std::size_t n = c.sizes.size();
  if (n == 0) return 0;
  std::vector<std::size_t> step_of(n);
  for (std::size_t t = 0; t < n; ++t) step_of[order[t]] = t;

  // Which steps read each value.
  std::vector<std::set<std::size_t>> readers(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p : c.producers[v]) readers[p].insert(step_of[v]);
  }
  const auto alive_at = [&](std::size_t v, std::size_t t) {
    if (t < step_of[v]) return false;
    if (t == step_of[v] || c.outputs[v]) return true;
    return !readers[v].empty() && *readers[v].rbegin() >= t;
  };

  // Buffer identity per value, decided in schedule order.
  std::vector<std::size_t> owner(n);
  std::vector<std::uint64_t> capacity(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t v = order[t];
    owner[v] = v;
    capacity[v] = c.sizes[v];
    if (!c.may_alias[v]) continue;
    for (std::size_t p : c.producers[v]) {
      const bool last_reader = *readers[p].rbegin() == t;
      if (!c.outputs[p] && last_reader && capacity[owner[p]] >= c.sizes[v]) {
        owner[v] = owner[p];
        break;
      }
    }
  }

  std::uint64_t peak = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::set<std::size_t> buffers;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive_at(v, t)) buffers.insert(owner[v]);
    }
    std::uint64_t live = 0;
    for (std::size_t b : buffers) live += capacity[b];
    peak = std::max(peak, live);
  }
  return peak;
}

/// Every topological order of a DAG given as producer lists.
inline void all_orders(const std::vector<std::vector<std::size_t>>& producers,
                       std::vector<std::size_t>& prefix,
                       std::vector<bool>& placed,
                       std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = producers.size();
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (placed[v]) continue;
    const bool ready = std::all_of(producers[v].begin(), producers[v].end(),
                                   [&](std::size_t p) { return placed[p]; });
    if (!ready) continue;
    placed[v] = true;
    prefix.push_back(v);
    all_orders(producers, prefix, placed, out);
    prefix.pop_back();
    placed[v] = false;
  }
}

inline std::vector<std::vector<std::size_t>> all_orders(
    const std::vector<std::vector<std::size_t>>& producers) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  std::vector<bool> placed(producers.size(), false);
  all_orders(producers, prefix, placed, out);
  return out;
}

}  // namespace dnncost::oracle
