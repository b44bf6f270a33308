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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcsaudit/errors.hpp"

namespace rcsaudit {

//=============================================================================
// Recovery of numeric values from colorbar-coded figure data
//=============================================================================

struct RGBTriple {
  int r = 0, g = 0, b = 0;
  bool operator==(const RGBTriple&) const = default;
};

// |dr| + |dg| + |db|
int l1_distance(const RGBTriple& a, const RGBTriple& b);

// Colorbar description: (value, color) at each tick mark plus the legend top,
// values strictly increasing, and the number of interpolated points inserted
// between neighboring anchors.
struct ColorLegend {
  struct Anchor {
    double value;
    RGBTriple color;
  };
  std::vector<Anchor> anchors;
  int interpolation_density = 99;
};

// Dense lookup table built from a legend; entry count is
// (anchors-1) * (density+1) + 1.
struct LegendTable {
  struct Entry {
    double value;
    RGBTriple color;
  };
  std::vector<Entry> entries;

  // width of the interpolation grid around the given value
  double grid_step_at(double value) const;
};

// Channel-wise and value-wise linear interpolation between anchors, channels
// rounded half-up to integers.
LegendTable build_legend_table(const ColorLegend& legend);

struct ColorMatch {
  double value = 0.0;
  int distance = 0;
  std::size_t entry_index = 0;
};

// Entry minimizing the L1 distance to the query; ties break toward the
// smaller value.
ColorMatch match_color(const LegendTable& table, const RGBTriple& query);

// Elementwise match over a gate -> color map.
std::map<std::string, ColorMatch> extract_gate_errors(
    const LegendTable& table, const std::map<std::string, RGBTriple>& colors);

struct ErrorAggregates {
  double mean = 0.0, median = 0.0, min = 0.0, max = 0.0;
};

ErrorAggregates aggregate_errors(const std::map<std::string, ColorMatch>& matches);

}  // namespace rcsaudit
