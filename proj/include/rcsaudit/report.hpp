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

#include <map>
#include <string>
#include <vector>

#include "rcsaudit/ingest.hpp"

namespace rcsaudit {

//=============================================================================
// Regeneration of the shipped numeric tables from raw fixtures, with
// cell-by-cell diffs against the transcribed values.
//=============================================================================

enum class ReportTarget { table2, table3, table4, table5, table6, gate_tables };

ReportTarget parse_report_target(const std::string& name);
const char* to_string(ReportTarget target);

// One regenerated cell compared against its printed value. The tolerance is
// one unit in the target's last printed digit plus one unit of each printed
// input's last digit propagated through the formula (printed inputs are
// roundings of unrounded pipeline values).
struct CellCheck {
  std::string row;
  std::string column;
  double computed = 0.0;
  double printed = 0.0;
  double tolerance = 0.0;
  bool ok = true;
};

struct TableReport {
  ReportTarget target = ReportTarget::table2;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // regenerated table
  std::vector<CellCheck> checks;

  std::size_t failure_count() const;
  bool all_ok() const { return failure_count() == 0; }
  std::string render_csv() const;
  // "<target>: N cells checked, M failures" plus one line per failing cell
  std::string diff_summary() const;
};

TableReport run_report(const ParsedCorpus& corpus, ReportTarget target);

// Restricts the diff to selected columns (comma-separated). Exact column
// names work everywhere; friendly aliases: D (base product), G (refined
// product), ratios, combined, adj.
void filter_report_columns(TableReport& report, const std::string& selectors);

// decimal places and unit-in-the-last-place of a printed numeral
int printed_decimals(const std::string& cell);
double printed_ulp(const std::string& cell);

//=============================================================================
// Prediction-vs-published gap artifact
//=============================================================================

// Relative deviations of every regenerated component-product column from the
// published prediction column, per circuit size.
struct GapReport {
  std::vector<std::string> columns;
  std::vector<int> sizes;
  // rel_deviation[column][row index]
  std::map<std::string, std::vector<double>> rel_deviation;
  // per column: rows with |deviation| > 5%
  std::map<std::string, std::size_t> exceeding_5pct;

  std::string render_csv() const;
};

GapReport formula77_gap_report(const ParsedCorpus& corpus);

}  // namespace rcsaudit
