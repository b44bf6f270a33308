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

#include "rcsaudit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rcsaudit {

namespace {

struct Range {
  double lo = 0.0, hi = 1.0;
  void expand(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string render_scatter_svg(const std::vector<SvgSeries>& series,
                               const SvgPlotOptions& opt) {
  const int margin_left = 64, margin_right = 16, margin_top = 36, margin_bottom = 48;
  const double plot_w = opt.width - margin_left - margin_right;
  const double plot_h = opt.height - margin_top - margin_bottom;

  bool first = true;
  Range xr, yr;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (first) {
        xr = {x, x};
        yr = {y, y};
        first = false;
      } else {
        xr.expand(x);
        yr.expand(y);
      }
    }
  if (first) {
    xr = {0, 1};
    yr = {0, 1};
  }
  if (xr.hi == xr.lo) xr.hi = xr.lo + 1;
  if (yr.hi == yr.lo) yr.hi = yr.lo + 1;
  const double xpad = 0.05 * (xr.hi - xr.lo), ypad = 0.05 * (yr.hi - yr.lo);
  xr.lo -= xpad;
  xr.hi += xpad;
  yr.lo -= ypad;
  yr.hi += ypad;

  const auto px = [&](double x) {
    return margin_left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto py = [&](double y) {
    return margin_top + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * plot_h;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
     << "\" height=\"" << opt.height << "\">\n";
  os << "<!-- data";
  for (const auto& s : series) {
    os << "\nseries " << s.label << '\n';
    for (const auto& [x, y] : s.points) os << fmt(x) << ',' << fmt(y) << '\n';
  }
  os << "-->\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << opt.width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"14\">"
     << opt.title << "</text>\n";

  // axes
  os << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_h
     << "\" x2=\"" << margin_left + plot_w << "\" y2=\"" << margin_top + plot_h
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\""
     << margin_left << "\" y2=\"" << margin_top + plot_h << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    const double xv = xr.lo + (xr.hi - xr.lo) * tick / 5.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * tick / 5.0;
    os << "<text x=\"" << px(xv) << "\" y=\"" << margin_top + plot_h + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
       << fmt(xv) << "</text>\n";
    os << "<text x=\"" << margin_left - 6 << "\" y=\"" << py(yv) + 3
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << fmt(yv) << "</text>\n";
  }
  os << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << opt.height - 8
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << opt.x_label << "</text>\n";
  os << "<text x=\"14\" y=\"" << margin_top + plot_h / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 14 "
     << margin_top + plot_h / 2 << ")\">" << opt.y_label << "</text>\n";

  if (opt.fit_slope_intercept) {
    const auto [slope, intercept] = *opt.fit_slope_intercept;
    os << "<line x1=\"" << px(xr.lo) << "\" y1=\"" << py(intercept + slope * xr.lo)
       << "\" x2=\"" << px(xr.hi) << "\" y2=\"" << py(intercept + slope * xr.hi)
       << "\" stroke=\"#d62728\" stroke-dasharray=\"5,3\"/>\n";
  }

  int legend_y = margin_top + 14;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"2.5\" fill=\"" << s.color << "\" fill-opacity=\"0.75\"/>\n";
    if (!s.label.empty()) {
      os << "<circle cx=\"" << margin_left + plot_w - 110 << "\" cy=\""
         << legend_y - 4 << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      os << "<text x=\"" << margin_left + plot_w - 102 << "\" y=\"" << legend_y
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
         << "</text>\n";
      legend_y += 16;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rcsaudit
