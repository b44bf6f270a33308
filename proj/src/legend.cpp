// Copyright 2026 The rcsaudit Authors
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

#include "rcsaudit/legend.hpp"

#include <algorithm>
#include <cmath>

namespace rcsaudit {

int l1_distance(const RGBTriple& a, const RGBTriple& b) {
  return std::abs(a.r - b.r) + std::abs(a.g - b.g) + std::abs(a.b - b.b);
}

namespace {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

void check_channel(int c) {
  if (c < 0 || c > 255)
    throw DomainError("RGB channel out of [0,255]: " + std::to_string(c));
}

}  // namespace

double LegendTable::grid_step_at(double value) const {
  double step = 0.0, prev = entries.front().value;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    step = entries[i].value - prev;
    if (value <= entries[i].value + 1e-15) break;
    prev = entries[i].value;
  }
  return step;
}

LegendTable build_legend_table(const ColorLegend& legend) {
  if (legend.anchors.size() < 2)
    throw DomainError("legend needs at least 2 anchors");
  if (legend.interpolation_density < 0)
    throw DomainError("negative interpolation density");
  for (std::size_t i = 0; i < legend.anchors.size(); ++i) {
    const auto& c = legend.anchors[i].color;
    check_channel(c.r);
    check_channel(c.g);
    check_channel(c.b);
    if (i > 0 && !(legend.anchors[i].value > legend.anchors[i - 1].value))
      throw DomainError("legend anchor values not strictly increasing at index " +
                        std::to_string(i));
  }

  const int steps = legend.interpolation_density + 1;
  LegendTable table;
  table.entries.reserve((legend.anchors.size() - 1) * steps + 1);
  for (std::size_t i = 0; i + 1 < legend.anchors.size(); ++i) {
    const auto& a = legend.anchors[i];
    const auto& b = legend.anchors[i + 1];
    for (int k = 0; k < steps; ++k) {
      const double t = static_cast<double>(k) / steps;
      LegendTable::Entry e;
      e.value = a.value + (b.value - a.value) * t;
      e.color = {round_half_up(a.color.r + (b.color.r - a.color.r) * t),
                 round_half_up(a.color.g + (b.color.g - a.color.g) * t),
                 round_half_up(a.color.b + (b.color.b - a.color.b) * t)};
      table.entries.push_back(e);
    }
  }
  table.entries.push_back({legend.anchors.back().value, legend.anchors.back().color});
  return table;
}

ColorMatch match_color(const LegendTable& table, const RGBTriple& query) {
  if (table.entries.empty()) throw DomainError("empty legend table");
  ColorMatch best{table.entries[0].value, l1_distance(table.entries[0].color, query), 0};
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    const int d = l1_distance(table.entries[i].color, query);
    // entries are scanned in value order, so ties keep the smaller value
    if (d < best.distance) best = {table.entries[i].value, d, i};
  }
  return best;
}

std::map<std::string, ColorMatch> extract_gate_errors(
    const LegendTable& table, const std::map<std::string, RGBTriple>& colors) {
  if (colors.empty()) throw DomainError("empty gate color map");
  std::map<std::string, ColorMatch> out;
  for (const auto& [gate, color] : colors) out[gate] = match_color(table, color);
  return out;
}

ErrorAggregates aggregate_errors(const std::map<std::string, ColorMatch>& matches) {
  if (matches.empty()) throw DomainError("no matches to aggregate");
  std::vector<double> vals;
  vals.reserve(matches.size());
  for (const auto& [_, m] : matches) vals.push_back(m.value);
  std::sort(vals.begin(), vals.end());
  ErrorAggregates agg;
  agg.min = vals.front();
  agg.max = vals.back();
  double s = 0.0;
  for (double v : vals) s += v;
  agg.mean = s / static_cast<double>(vals.size());
  const std::size_t mid = vals.size() / 2;
  agg.median = vals.size() % 2 ? vals[mid] : 0.5 * (vals[mid - 1] + vals[mid]);
  return agg;
}

}  // namespace rcsaudit
