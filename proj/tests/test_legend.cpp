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

#include <doctest.h>

#include <cmath>

#include "rcsaudit/csv.hpp"
#include "rcsaudit/ingest.hpp"
#include "rcsaudit/legend.hpp"
#include "rcsaudit/simulator.hpp"

using namespace rcsaudit;

namespace {

ColorLegend sycamore_fixture_legend() {
  const std::string path =
      std::string(RCSAUDIT_FIXTURES_FOR_TESTS) + "/legend_sycamore.csv";
  return parse_legend(read_text_file(path));
}

// brute-force nearest entry, independent of match_color's scan
ColorMatch brute_force_match(const LegendTable& table, const RGBTriple& q) {
  ColorMatch best{0, 1 << 30, 0};
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const int d = l1_distance(table.entries[i].color, q);
    if (d < best.distance ||
        (d == best.distance && table.entries[i].value < best.value))
      best = {table.entries[i].value, d, i};
  }
  return best;
}

}  // namespace

TEST_CASE("entry count formula") {
  SUBCASE("shipped legend: 13 anchors, density 99 -> 1201") {
    const LegendTable table = build_legend_table(sycamore_fixture_legend());
    CHECK(table.entries.size() == 1201);
  }
  SUBCASE("two anchors, density 0 -> the anchors themselves") {
    ColorLegend legend;
    legend.interpolation_density = 0;
    legend.anchors = {{0.0, {0, 0, 0}}, {1.0, {255, 255, 255}}};
    const LegendTable table = build_legend_table(legend);
    REQUIRE(table.entries.size() == 2);
    CHECK(table.entries[0].value == 0.0);
    CHECK(table.entries[1].color == RGBTriple{255, 255, 255});
  }
  SUBCASE("holds for arbitrary anchor counts and densities") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const int anchors = 2 + static_cast<int>(rng.below(6));
      const int density = static_cast<int>(rng.below(40));
      ColorLegend legend;
      legend.interpolation_density = density;
      for (int i = 0; i < anchors; ++i)
        legend.anchors.push_back({static_cast<double>(i),
                                  {static_cast<int>(rng.below(256)),
                                   static_cast<int>(rng.below(256)),
                                   static_cast<int>(rng.below(256))}});
      CHECK(build_legend_table(legend).entries.size() ==
            static_cast<std::size_t>((anchors - 1) * (density + 1) + 1));
    }
  }
}

TEST_CASE("midpoint interpolation with half-up channel rounding") {
  ColorLegend legend;
  legend.interpolation_density = 1;
  legend.anchors = {{0.0, {0, 0, 0}}, {1.0, {255, 255, 255}}};
  const LegendTable table = build_legend_table(legend);
  REQUIRE(table.entries.size() == 3);
  CHECK(table.entries[1].value == doctest::Approx(0.5));
  CHECK(table.entries[1].color == RGBTriple{128, 128, 128});
}

TEST_CASE("legend validation") {
  ColorLegend legend;
  legend.anchors = {{0.5, {0, 0, 0}}, {0.2, {9, 9, 9}}};
  CHECK_THROWS_AS(build_legend_table(legend), DomainError);
  legend.anchors = {{0.5, {0, 0, 0}}};
  CHECK_THROWS_AS(build_legend_table(legend), DomainError);
  legend.anchors = {{0.1, {0, 0, -3}}, {0.2, {9, 9, 9}}};
  CHECK_THROWS_AS(build_legend_table(legend), DomainError);
}

TEST_CASE("match_color") {
  const ColorLegend legend = sycamore_fixture_legend();
  const LegendTable table = build_legend_table(legend);

  SUBCASE("anchor colors match exactly") {
    for (const auto& anchor : legend.anchors) {
      const ColorMatch m = match_color(table, anchor.color);
      CHECK(m.distance == 0);
      CHECK(m.value == doctest::Approx(anchor.value));
    }
  }
  SUBCASE("exact interpolated midpoint color returns the midpoint value") {
    // independent linear-interpolation oracle between anchors 3 and 4
    const auto& a = legend.anchors[3];
    const auto& b = legend.anchors[4];
    const double t = 50.0 / 100.0;
    const RGBTriple mid{
        static_cast<int>(std::floor(a.color.r + (b.color.r - a.color.r) * t + 0.5)),
        static_cast<int>(std::floor(a.color.g + (b.color.g - a.color.g) * t + 0.5)),
        static_cast<int>(std::floor(a.color.b + (b.color.b - a.color.b) * t + 0.5))};
    const double mid_value = a.value + (b.value - a.value) * t;
    const ColorMatch m = match_color(table, mid);
    CHECK(m.distance == 0);
    CHECK(m.value == doctest::Approx(mid_value).epsilon(1e-12));
  }
  SUBCASE("one-channel perturbation keeps the value at distance 1") {
    // move along a channel the color path does not use near these anchors, so
    // the perturbed color is off the interpolation path
    for (const auto& anchor : {legend.anchors[0], legend.anchors[6]}) {
      RGBTriple q = anchor.color;
      q.g += 1;
      const ColorMatch m = match_color(table, q);
      const ColorMatch oracle = brute_force_match(table, q);
      CHECK(m.distance == 1);
      CHECK(m.value == doctest::Approx(anchor.value));
      CHECK(m.value == doctest::Approx(oracle.value));
      CHECK(m.distance == oracle.distance);
    }
  }
  SUBCASE("round trip over every table entry") {
    for (const auto& entry : table.entries) {
      const ColorMatch m = match_color(table, entry.color);
      CHECK(m.distance == 0);
      CHECK(m.value == entry.value);
    }
  }
  SUBCASE("agrees with the brute-force oracle on random queries") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const RGBTriple q{static_cast<int>(rng.below(256)),
                        static_cast<int>(rng.below(256)),
                        static_cast<int>(rng.below(256))};
      const ColorMatch got = match_color(table, q);
      const ColorMatch oracle = brute_force_match(table, q);
      CHECK(got.distance == oracle.distance);
      CHECK(got.value == oracle.value);
    }
  }
}

TEST_CASE("tie-breaking picks the smaller value") {
  ColorLegend legend;
  legend.interpolation_density = 0;
  // two anchors with colors equidistant from the query
  legend.anchors = {{0.1, {10, 0, 0}}, {0.2, {30, 0, 0}}};
  const LegendTable table = build_legend_table(legend);
  const ColorMatch m = match_color(table, {20, 0, 0});
  CHECK(m.distance == 10);
  CHECK(m.value == doctest::Approx(0.1));
}

TEST_CASE("small perturbations move the value at most one grid step") {
  // synthetic legend whose adjacent colors differ by >= 3 in L1
  ColorLegend legend;
  legend.interpolation_density = 9;
  legend.anchors = {{0.0, {0, 0, 0}}, {1.0, {120, 60, 30}}};  // 21 L1 per step
  const LegendTable table = build_legend_table(legend);
  const double step = table.grid_step_at(0.5);
  Rng rng(23);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    RGBTriple q = table.entries[i].color;
    switch (rng.below(3)) {
      case 0: q.r += (rng.below(2) ? 1 : -1); break;
      case 1: q.g += (rng.below(2) ? 1 : -1); break;
      default: q.b += (rng.below(2) ? 1 : -1); break;
    }
    q.r = std::max(q.r, 0);
    q.g = std::max(q.g, 0);
    q.b = std::max(q.b, 0);
    const ColorMatch m = match_color(table, q);
    CHECK(std::fabs(m.value - table.entries[i].value) <= step + 1e-12);
  }
}

TEST_CASE("extract_gate_errors") {
  const LegendTable table = build_legend_table(sycamore_fixture_legend());
  SUBCASE("empty color map is an error") {
    CHECK_THROWS_AS(extract_gate_errors(table, {}), DomainError);
  }
  SUBCASE("round trip through colors generated from the table") {
    std::map<std::string, RGBTriple> colors;
    std::map<std::string, double> want;
    for (std::size_t i = 0; i < table.entries.size(); i += 97) {
      const std::string id = "g" + std::to_string(i);
      colors[id] = table.entries[i].color;
      want[id] = table.entries[i].value;
    }
    const auto got = extract_gate_errors(table, colors);
    REQUIRE(got.size() == colors.size());
    for (const auto& [id, match] : got) {
      CHECK(match.distance == 0);
      CHECK(match.value == want[id]);
    }
  }
  SUBCASE("aggregates") {
    std::map<std::string, ColorMatch> matches;
    matches["a"] = {0.002, 0, 0};
    matches["b"] = {0.004, 0, 0};
    matches["c"] = {0.009, 0, 0};
    const ErrorAggregates agg = aggregate_errors(matches);
    CHECK(agg.mean == doctest::Approx(0.005));
    CHECK(agg.median == doctest::Approx(0.004));
    CHECK(agg.min == doctest::Approx(0.002));
    CHECK(agg.max == doctest::Approx(0.009));
  }
}
