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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rcsaudit {

// Minimal standalone SVG scatter plots; the raw data rides along in an
// embedded comment so the figure stays self-describing.

struct SvgSeries {
  std::string label;
  std::string color = "#1f77b4";
  std::vector<std::pair<double, double>> points;
};

struct SvgPlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 480;
  // optional y = intercept + slope * x overlay
  std::optional<std::pair<double, double>> fit_slope_intercept;
};

std::string render_scatter_svg(const std::vector<SvgSeries>& series,
                               const SvgPlotOptions& options);

}  // namespace rcsaudit
