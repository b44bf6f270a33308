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

#include "rcsaudit/csv.hpp"
#include "rcsaudit/estimators.hpp"
#include "rcsaudit/legend.hpp"
#include "rcsaudit/types.hpp"

namespace rcsaudit {

//=============================================================================
// File parsers. Percentage / per-mille fixtures are converted to unitless
// fractions here, exactly once; unit suffixes are part of the headers.
//=============================================================================

// header: qubit,q01_pct,q10_pct,e1_sim_pct,n_ins ; empty e1 cells are allowed
// (the 2020 Sycamore file omits one) and surface in missing_one_gate().
ComponentErrorTable parse_component_table(const std::string& text);

// header: qubit1,qubit2,e2_pct_per_mille ; values are per-1000 as printed
std::map<QubitPair, double> parse_two_gate_table(const std::string& text);

// One bitstring per line, leftmost character = first qubit of the circuit's
// qubit order. '#' comment lines may carry n=, m=, circuit_id= metadata.
SampleSet parse_samples(const std::string& text);

// header: bitstring,probability
std::map<std::string, double> parse_amplitudes(const std::string& text);

// Aligns ideal probabilities with the sample set; a sampled bitstring absent
// from the amplitude map raises MissingAmplitudesError naming it.
void attach_amplitudes(SampleSet& samples,
                       const std::map<std::string, double>& amplitudes);

// legend spec file: value,r,g,b per anchor line
ColorLegend parse_legend(const std::string& text, int interpolation_density = 99);

// gate color file: gate_id,r,g,b
std::map<std::string, RGBTriple> parse_gate_colors(const std::string& text);

// canonical serializations (sorted keys, fixed formatting); parse followed by
// serialize is idempotent
std::string serialize_component_table(const ComponentErrorTable& table);
std::string serialize_two_gate_table(const std::map<QubitPair, double>& pairs);
std::string serialize_samples(const SampleSet& samples);
std::string serialize_amplitudes(const SampleSet& samples);

// flat key=value text (simulator configs); '#' comments allowed
std::map<std::string, std::string> parse_keyvalue_config(const std::string& text);

//=============================================================================
// Circuit files
//=============================================================================

// Plain-text circuit description: n/m/qubits/layer lines, optional seed,
// gateset, coupling and patch lines.
struct CircuitFile {
  CircuitSpec spec;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string gate_set = "haar";
  std::vector<std::pair<int, int>> coupling;  // qubit indexes, optional
};

CircuitFile parse_circuit_file(const std::string& text);
std::string serialize_circuit_file(const CircuitFile& circuit);

//=============================================================================
// Shipped fixtures
//=============================================================================

struct Fixture {
  std::string name;
  std::string path;
  std::string source_citation;  // first comment block of the file
  CsvFile csv;
  std::uint64_t checksum = 0;

  std::size_t row_count() const { return csv.rows.size(); }
};

// Everything the toolkit ships: component error tables, the printed numeric
// tables used by the report targets, and the legend/color fixtures. Immutable
// after load; keyed circuits are built on demand from the structure data.
class ParsedCorpus {
 public:
  // component rates as published (1-gate gaps unfilled)
  ComponentErrorTable reported;
  // prediction-ready variant: 1-gate gaps filled from the fallback fixture,
  // retrieved per-coupler 2-gate errors merged in
  ComponentErrorTable reported_filled;
  std::map<QubitId, ReadoutErrorPair> relfreq_readout;
  std::map<QubitId, double> one_gate_retrieved;  // fractions
  std::map<QubitPair, double> two_gate;          // fractions
  std::vector<QubitId> qubit_order;              // fixture row order

  ColorLegend legend;
  std::map<std::string, RGBTriple> one_gate_colors;
  std::map<std::string, RGBTriple> two_gate_colors;

  const Fixture& fixture(const std::string& name) const;
  const std::map<std::string, Fixture>& fixtures() const { return fixtures_; }

  // qubits of the n-qubit circuit: insertion order n_ins <= n
  std::vector<QubitId> qubits_at(int n) const;
  // couplers with both endpoints in the n-qubit circuit
  std::vector<QubitPair> couplers_at(int n) const;

  // per-circuit-size no-readout-error probability of the relative-frequency
  // dataset (the per-size per-qubit files are not republished; this is the
  // printed per-size aggregate)
  double relfreq_survival(int n) const;

  friend ParsedCorpus load_fixtures(const std::string& dir);

 private:
  std::map<std::string, Fixture> fixtures_;
};

// Fixture directory resolution: RCSAUDIT_FIXTURES env var, else the
// compiled-in default next to the sources.
std::string default_fixture_directory();

// Loads and validates all fixtures (schema + checksum manifest).
ParsedCorpus load_fixtures(const std::string& dir);
ParsedCorpus load_fixtures();

//=============================================================================
// Sycamore circuit reconstruction
//=============================================================================

enum class SycamoreFamily { efgh, abcd };

// Rebuilds the n-qubit, m-cycle circuit structure: a 1-gate layer on every
// qubit per cycle plus a trailing one, and 2-gate layers over the coupler
// classes in the family's repeating pattern (EFGH or ABCDCDAB).
CircuitSpec sycamore_circuit(const ParsedCorpus& corpus, int n, int m,
                             SycamoreFamily family);

}  // namespace rcsaudit
