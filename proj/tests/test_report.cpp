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

#include "rcsaudit/error_models.hpp"
#include "rcsaudit/report.hpp"

using namespace rcsaudit;

namespace {
const ParsedCorpus& corpus() {
  static const ParsedCorpus c = load_fixtures(RCSAUDIT_FIXTURES_FOR_TESTS);
  return c;
}
}  // namespace

TEST_CASE("printed-digit helpers") {
  CHECK(printed_decimals("0.3242") == 4);
  CHECK(printed_decimals("12") == 0);
  CHECK(printed_ulp("0.520") == doctest::Approx(1e-3));
  CHECK(printed_ulp("0.01550") == doctest::Approx(1e-5));
}

TEST_CASE("readout survival products reproduce the published column") {
  const auto q53 = corpus().qubits_at(53);
  const auto q12 = corpus().qubits_at(12);
  CHECK(std::fabs(readout_survival_product(q53, corpus().reported) - 0.123) <= 5e-4);
  CHECK(std::fabs(readout_survival_product(q12, corpus().reported) - 0.520) <= 5e-4);
  // the n=53 relative-frequency product is consistent with the printed 0.113
  std::vector<double> errors;
  for (const auto& q : q53) errors.push_back(corpus().relfreq_readout.at(q).mean());
  CHECK(std::fabs(survival_product(errors) - corpus().relfreq_survival(53)) <= 1e-3);
}

TEST_CASE("fully component-specific prediction for the largest circuit") {
  const CircuitSpec circuit = sycamore_circuit(corpus(), 53, 14, SycamoreFamily::efgh);
  const FidelityPrediction pred = predict_formula77(circuit, corpus().reported_filled);
  CHECK(std::fabs(pred.value - 0.0053) <= 1e-4);
  CHECK(pred.value == doctest::Approx(0.005267).epsilon(2e-4));
}

TEST_CASE("table regeneration passes the printed-digit diff") {
  SUBCASE("table2") {
    const TableReport r = run_report(corpus(), ReportTarget::table2);
    CHECK(r.checks.size() == 28 * 4);
    CHECK(r.failure_count() == 0);
  }
  SUBCASE("table3") {
    const TableReport r = run_report(corpus(), ReportTarget::table3);
    // both fully-derived columns on all 28 rows, plus the one relfreq cell
    // whose per-qubit inputs are shipped (n=53)
    CHECK(r.checks.size() == 28 * 2 + 1);
    CHECK(r.failure_count() == 0);
  }
  SUBCASE("table4") {
    const TableReport r = run_report(corpus(), ReportTarget::table4);
    CHECK(r.checks.size() == 28 * 11);
    CHECK_MESSAGE(r.failure_count() == 0, r.diff_summary());
  }
  SUBCASE("table5") {
    const TableReport r = run_report(corpus(), ReportTarget::table5);
    CHECK(r.checks.size() == 32 * 3);
    CHECK_MESSAGE(r.failure_count() == 0, r.diff_summary());
  }
  SUBCASE("table6") {
    const TableReport r = run_report(corpus(), ReportTarget::table6);
    // D and G everywhere; ratios only where XEB / model references exist
    // (24 rows carry a measured XEB, 25 a published model curve)
    CHECK(r.checks.size() == 36 * 2 + 24 * 2 + 25);
    CHECK_MESSAGE(r.failure_count() == 0, r.diff_summary());
  }
  SUBCASE("gate_tables") {
    const TableReport r = run_report(corpus(), ReportTarget::gate_tables);
    CHECK(r.checks.size() == 53 + 86);
    CHECK_MESSAGE(r.failure_count() == 0, r.diff_summary());
  }
}

TEST_CASE("diff summary flags a failing cell") {
  TableReport report;
  report.target = ReportTarget::table6;
  CellCheck bad;
  bad.row = "r";
  bad.column = "c";
  bad.computed = 1.0;
  bad.printed = 2.0;
  bad.tolerance = 0.5;
  bad.ok = false;
  report.checks.push_back(bad);
  CHECK(report.failure_count() == 1);
  CHECK(report.diff_summary().find("FAIL") != std::string::npos);
}

TEST_CASE("report target names") {
  CHECK(parse_report_target("table4") == ReportTarget::table4);
  CHECK(parse_report_target("gate_tables") == ReportTarget::gate_tables);
  CHECK_THROWS_AS(parse_report_target("table9"), Error);
}

TEST_CASE("column filtering") {
  SUBCASE("table6 aliases") {
    TableReport r = run_report(corpus(), ReportTarget::table6);
    filter_report_columns(r, "D,G,ratios");
    CHECK(r.checks.size() == 36 * 2 + 24 * 2 + 25);  // everything matches
    TableReport d_only = run_report(corpus(), ReportTarget::table6);
    filter_report_columns(d_only, "D");
    CHECK(d_only.checks.size() == 36);
  }
  SUBCASE("table5 combined") {
    TableReport r = run_report(corpus(), ReportTarget::table5);
    filter_report_columns(r, "combined");
    CHECK(r.checks.size() == 32 * 2);
    CHECK(r.failure_count() == 0);
  }
  SUBCASE("empty selector keeps everything") {
    TableReport r = run_report(corpus(), ReportTarget::table5);
    const std::size_t before = r.checks.size();
    filter_report_columns(r, "");
    CHECK(r.checks.size() == before);
  }
}

TEST_CASE("table4 part assembly agrees with the canonical product") {
  // the per-column products must match predict_formula77 run on an
  // equivalent component table, to floating-point accuracy
  const AveragedRates avg;
  for (int n : {12, 30, 53}) {
    const CircuitSpec circuit = sycamore_circuit(corpus(), n, 14, SycamoreFamily::efgh);

    ComponentErrorTable variant = corpus().reported_filled;
    for (const auto& q : circuit.qubits) variant.set_one_gate(q, avg.e1_avg);
    const double via_table = predict_formula77(circuit, variant).value;

    std::vector<double> two_errors;
    for (const auto& layer : circuit.layers)
      for (const auto& [a, b] : layer.two_gates)
        two_errors.push_back(corpus().reported_filled.two_gate_error(a, b));
    const double via_parts =
        survival_power(avg.e1_avg, static_cast<long long>(circuit.one_gate_count())) *
        survival_product(two_errors) *
        readout_survival_product(circuit.qubits, corpus().reported);
    CHECK(via_parts == doctest::Approx(via_table).epsilon(1e-12));
  }
}

TEST_CASE("prediction columns deviate from the published prediction") {
  const GapReport gap = formula77_gap_report(corpus());
  CHECK(gap.sizes.size() == 28);
  for (const auto& [column, count] : gap.exceeding_5pct)
    CHECK_MESSAGE(count > gap.sizes.size() / 2, column);
  const std::string csv = gap.render_csv();
  CHECK(csv.find("rel_dev_f77_qb_gate_qb") != std::string::npos);
}
