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

#include "rcsaudit/ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#ifndef RCSAUDIT_DEFAULT_FIXTURE_DIR
#define RCSAUDIT_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace rcsaudit {

//=============================================================================
// Parsers
//=============================================================================

ComponentErrorTable parse_component_table(const std::string& text) {
  const CsvFile csv = parse_csv(text, "qubit,q01_pct,q10_pct,e1_sim_pct,n_ins");
  ComponentErrorTable table;
  for (const auto& row : csv.rows) {
    const QubitId& q = row.cells[0];
    if (table.has_readout(q)) throw ParseError("duplicate qubit " + q, row.line);
    ReadoutErrorPair pair;
    pair.q01 = parse_number(row.cells[1], row.line) / 100.0;
    pair.q10 = parse_number(row.cells[2], row.line) / 100.0;
    try {
      table.set_readout(q, pair);
      if (!row.cells[3].empty())
        table.set_one_gate(q, parse_number(row.cells[3], row.line) / 100.0);
      table.set_insertion_order(
          q, static_cast<int>(parse_integer(row.cells[4], row.line)));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), row.line);
    }
  }
  table.source_label = "component-table";
  return table;
}

std::map<QubitPair, double> parse_two_gate_table(const std::string& text) {
  const CsvFile csv = parse_csv(text, "qubit1,qubit2,e2_pct_per_mille");
  std::map<QubitPair, double> out;
  for (const auto& row : csv.rows) {
    if (row.cells[0] == row.cells[1])
      throw ParseError("self-pair " + row.cells[0], row.line);
    const QubitPair key = make_qubit_pair(row.cells[0], row.cells[1]);
    if (out.count(key))
      throw ParseError("duplicate pair " + key.first + "," + key.second, row.line);
    const double e = parse_number(row.cells[2], row.line) / 1000.0;
    if (e < 0.0 || e > 1.0)
      throw ParseError("2-gate error out of range", row.line);
    out[key] = e;
  }
  return out;
}

SampleSet parse_samples(const std::string& text) {
  SampleSet samples;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int declared_n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      // optional metadata: "# key=value"
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
        const std::string value = line.substr(eq + 1);
        if (key == "n") declared_n = static_cast<int>(parse_integer(value, lineno));
        else if (key == "m") samples.depth = static_cast<int>(parse_integer(value, lineno));
        else if (key == "circuit_id") samples.circuit_id = value;
        else if (key == "qubits") {
          std::istringstream qs(value);
          QubitId q;
          while (qs >> q) samples.qubit_ids.push_back(q);
        }
      }
      continue;
    }
    if (declared_n != 0 && static_cast<int>(line.size()) != declared_n)
      throw ParseError("bitstring length " + std::to_string(line.size()) +
                           " does not match declared n=" + std::to_string(declared_n),
                       lineno);
    samples.append_bitstring(line, lineno);
  }
  return samples;
}

std::map<std::string, double> parse_amplitudes(const std::string& text) {
  const CsvFile csv = parse_csv(text, "bitstring,probability");
  std::map<std::string, double> out;
  for (const auto& row : csv.rows) {
    const double p = parse_number(row.cells[1], row.line);
    if (p < 0.0) throw ParseError("negative probability", row.line);
    for (char c : row.cells[0])
      if (c != '0' && c != '1')
        throw ParseError("non-binary bitstring '" + row.cells[0] + "'", row.line);
    out[row.cells[0]] = p;
  }
  return out;
}

void attach_amplitudes(SampleSet& samples,
                       const std::map<std::string, double>& amplitudes) {
  std::vector<double> probs;
  probs.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string bits = samples.bitstring(i);
    auto it = amplitudes.find(bits);
    if (it == amplitudes.end())
      throw MissingAmplitudesError("no amplitude for bitstring " + bits);
    probs.push_back(it->second);
  }
  samples.set_ideal_probs(std::move(probs));
}

ColorLegend parse_legend(const std::string& text, int interpolation_density) {
  const CsvFile csv = parse_csv(text, "value,r,g,b");
  ColorLegend legend;
  legend.interpolation_density = interpolation_density;
  for (const auto& row : csv.rows) {
    ColorLegend::Anchor a;
    a.value = parse_number(row.cells[0], row.line);
    a.color = {static_cast<int>(parse_integer(row.cells[1], row.line)),
               static_cast<int>(parse_integer(row.cells[2], row.line)),
               static_cast<int>(parse_integer(row.cells[3], row.line))};
    legend.anchors.push_back(a);
  }
  return legend;
}

std::map<std::string, RGBTriple> parse_gate_colors(const std::string& text) {
  const CsvFile csv = parse_csv(text, "gate_id,r,g,b");
  std::map<std::string, RGBTriple> out;
  for (const auto& row : csv.rows) {
    if (out.count(row.cells[0]))
      throw ParseError("duplicate gate id " + row.cells[0], row.line);
    out[row.cells[0]] = {static_cast<int>(parse_integer(row.cells[1], row.line)),
                         static_cast<int>(parse_integer(row.cells[2], row.line)),
                         static_cast<int>(parse_integer(row.cells[3], row.line))};
  }
  return out;
}

//=============================================================================
// Canonical serializations
//=============================================================================

namespace {

std::string format_fraction_pct(double fraction, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << fraction * 100.0;
  std::string s = os.str();
  while (s.find('.') != std::string::npos && (s.back() == '0')) s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string serialize_component_table(const ComponentErrorTable& table) {
  std::ostringstream os;
  os << "qubit,q01_pct,q10_pct,e1_sim_pct,n_ins\n";
  for (const auto& [q, pair] : table.readout()) {
    os << q << ',' << format_fraction_pct(pair.q01, 4) << ','
       << format_fraction_pct(pair.q10, 4) << ',';
    if (table.has_one_gate(q)) os << format_fraction_pct(table.one_gate_error(q), 4);
    os << ',' << table.insertion_order(q) << '\n';
  }
  return os.str();
}

std::string serialize_two_gate_table(const std::map<QubitPair, double>& pairs) {
  std::ostringstream os;
  os << "qubit1,qubit2,e2_pct_per_mille\n";
  for (const auto& [key, e] : pairs) {
    std::ostringstream v;
    v.setf(std::ios::fixed);
    v.precision(4);
    v << e * 1000.0;
    std::string s = v.str();
    while (s.find('.') != std::string::npos && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    os << key.first << ',' << key.second << ',' << s << '\n';
  }
  return os.str();
}

std::string serialize_samples(const SampleSet& samples) {
  std::ostringstream os;
  os << "# n=" << samples.n() << '\n';
  if (samples.depth >= 0) os << "# m=" << samples.depth << '\n';
  if (!samples.circuit_id.empty()) os << "# circuit_id=" << samples.circuit_id << '\n';
  if (static_cast<int>(samples.qubit_ids.size()) == samples.n()) {
    os << "# qubits=";
    for (std::size_t i = 0; i < samples.qubit_ids.size(); ++i)
      os << (i ? " " : "") << samples.qubit_ids[i];
    os << '\n';
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    os << samples.bitstring(i) << '\n';
  return os.str();
}

std::string serialize_amplitudes(const SampleSet& samples) {
  std::ostringstream os;
  os << "bitstring,probability\n";
  os.precision(17);
  std::map<std::string, double> unique;
  for (std::size_t i = 0; i < samples.size(); ++i)
    unique[samples.bitstring(i)] = samples.ideal_probs()[i];
  for (const auto& [bits, p] : unique) os << bits << ',' << p << '\n';
  return os.str();
}

std::map<std::string, std::string> parse_keyvalue_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + line + "'", lineno);
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

//=============================================================================
// Circuit files
//=============================================================================

CircuitFile parse_circuit_file(const std::string& text) {
  CircuitFile out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  bool have_n = false;
  int n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      ls >> n;
      have_n = true;
    } else if (key == "m") {
      ls >> out.spec.depth;
    } else if (key == "seed") {
      ls >> out.seed;
      out.has_seed = true;
    } else if (key == "gateset") {
      ls >> out.gate_set;
    } else if (key == "coupling") {
      std::string tok;
      while (ls >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw ParseError("bad coupling token '" + tok + "'", lineno);
        out.coupling.emplace_back(
            parse_integer(tok.substr(0, colon), lineno),
            parse_integer(tok.substr(colon + 1), lineno));
      }
    } else if (key == "qubits") {
      std::string tok;
      while (ls >> tok) out.spec.qubits.push_back(tok);
    } else if (key == "patch1" || key == "patch2") {
      if (!out.spec.patch_partition) out.spec.patch_partition.emplace();
      auto& target = key == "patch1" ? out.spec.patch_partition->first
                                     : out.spec.patch_partition->second;
      std::string tok;
      while (ls >> tok) target.push_back(tok);
    } else if (key == "layer") {
      std::string kind;
      ls >> kind;
      GateLayer layer;
      std::string tok;
      while (ls >> tok) {
        if (kind == "1g") {
          layer.one_gates.push_back(tok);
        } else if (kind == "2g") {
          const auto colon = tok.find(':');
          if (colon == std::string::npos)
            throw ParseError("bad 2-gate token '" + tok + "'", lineno);
          layer.two_gates.push_back(
              make_qubit_pair(tok.substr(0, colon), tok.substr(colon + 1)));
        } else {
          throw ParseError("unknown layer kind '" + kind + "'", lineno);
        }
      }
      out.spec.layers.push_back(std::move(layer));
    } else {
      throw ParseError("unknown circuit directive '" + key + "'", lineno);
    }
  }
  if (!have_n) throw ParseError("circuit file lacks an n line");
  if (static_cast<int>(out.spec.qubits.size()) != n)
    throw ParseError("qubit list length " + std::to_string(out.spec.qubits.size()) +
                     " does not match n=" + std::to_string(n));
  out.spec.validate();
  return out;
}

std::string serialize_circuit_file(const CircuitFile& circuit) {
  std::ostringstream os;
  os << "n " << circuit.spec.n() << '\n';
  os << "m " << circuit.spec.depth << '\n';
  if (circuit.has_seed) os << "seed " << circuit.seed << '\n';
  os << "gateset " << circuit.gate_set << '\n';
  if (!circuit.coupling.empty()) {
    os << "coupling";
    for (const auto& [a, b] : circuit.coupling) os << ' ' << a << ':' << b;
    os << '\n';
  }
  os << "qubits";
  for (const auto& q : circuit.spec.qubits) os << ' ' << q;
  os << '\n';
  if (circuit.spec.patch_partition) {
    os << "patch1";
    for (const auto& q : circuit.spec.patch_partition->first) os << ' ' << q;
    os << "\npatch2";
    for (const auto& q : circuit.spec.patch_partition->second) os << ' ' << q;
    os << '\n';
  }
  for (const auto& layer : circuit.spec.layers) {
    if (!layer.one_gates.empty()) {
      os << "layer 1g";
      for (const auto& q : layer.one_gates) os << ' ' << q;
      os << '\n';
    }
    if (!layer.two_gates.empty()) {
      os << "layer 2g";
      for (const auto& [a, b] : layer.two_gates) os << ' ' << a << ':' << b;
      os << '\n';
    }
    if (layer.one_gates.empty() && layer.two_gates.empty()) os << "layer 1g\n";
  }
  return os.str();
}

//=============================================================================
// Fixtures
//=============================================================================

namespace {

struct FixtureDecl {
  const char* name;
  const char* file;
  const char* header;
};

// registered fixture schemas
const FixtureDecl kFixtureDecls[] = {
    {"table1", "som_params_by_qubit.csv", "qubit,q01_pct,q10_pct,e1_sim_pct,n_ins"},
    {"one_gate_fallback", "one_gate_fallback.csv", "qubit,e1_per_mille"},
    {"readout_relfreq", "readout_relfreq_n53.csv", "qubit,q01_pct,q10_pct"},
    {"one_gate", "one_gate_retrieved.csv", "qubit,e1_per_mille"},
    {"two_gate", "two_gate_retrieved.csv", "qubit1,qubit2,e2_pct_per_mille"},
    {"table2", "readout_avg_by_n.csv",
     "n,q01_rep_pct,q01_rf_pct,q10_rep_pct,q10_rf_pct,avg_rep_pct,avg_rf_pct,"
     "diff_rep_pct,diff_rf_pct,empirical_diff_pct"},
    {"table3", "readout_survival_by_n.csv", "n,p_noerr_reported,p_noerr_relfreq,p_noerr_avg038"},
    {"table4", "predictions_by_n.csv",
     "n,eq2_avg,f77_qb_avg_avg,f77_avg_avg_qb,f77_qb_avg_qb,f77_avg_avg_rf,"
     "f77_qb_avg_rf,f77_qb_gate_qb,f77_qb_gate_rf,eq3_avg,eq3_qb,eq3_rf,google77,xeb"},
    {"table5", "patch_table.csv",
     "n,m,family,n_patch1,f77_patch1,xeb_patch1,n_patch2,f77_patch2,xeb_patch2,"
     "f77_combined,xeb_combined,google_pred,google_adj_pred"},
    {"table6", "refined_model_table.csv",
     "circuit_type,n,m,f1_pct,f2_pct,fread_pct,f77_pct,fidle_pct,fprep_pct,"
     "model_pct,xeb_pct,modelfig_pct,r_77_xeb,r_model_xeb,r_model_fig"},
    {"legend", "legend_sycamore.csv", "value,r,g,b"},
    {"one_gate_colors", "one_gate_colors.csv", "gate_id,r,g,b"},
    {"two_gate_colors", "two_gate_colors.csv", "gate_id,r,g,b"},
};

std::string join_comments(const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) {
    if (!out.empty()) out += ' ';
    out += c;
  }
  return out;
}

}  // namespace

std::string default_fixture_directory() {
  if (const char* env = std::getenv("RCSAUDIT_FIXTURES"); env && *env)
    return env;
  return RCSAUDIT_DEFAULT_FIXTURE_DIR;
}

const Fixture& ParsedCorpus::fixture(const std::string& name) const {
  auto it = fixtures_.find(name);
  if (it == fixtures_.end()) throw Error("unknown fixture: " + name);
  return it->second;
}

std::vector<QubitId> ParsedCorpus::qubits_at(int n) const {
  std::vector<QubitId> out;
  for (const auto& q : qubit_order)
    if (reported.insertion_order(q) <= n) out.push_back(q);
  if (static_cast<int>(out.size()) != n)
    throw DomainError("no circuit with n=" + std::to_string(n) +
                      " in the insertion-order data (got " +
                      std::to_string(out.size()) + " qubits)");
  return out;
}

std::vector<QubitPair> ParsedCorpus::couplers_at(int n) const {
  const auto qs = qubits_at(n);
  const std::set<QubitId> keep(qs.begin(), qs.end());
  std::vector<QubitPair> out;
  for (const auto& [pair, _] : two_gate)
    if (keep.count(pair.first) && keep.count(pair.second)) out.push_back(pair);
  return out;
}

double ParsedCorpus::relfreq_survival(int n) const {
  const Fixture& t3 = fixture("table3");
  for (const auto& row : t3.csv.rows)
    if (parse_integer(row.cells[0], row.line) == n)
      return parse_number(row.cells[2], row.line);
  throw Error("no relfreq survival entry for n=" + std::to_string(n));
}

ParsedCorpus load_fixtures(const std::string& dir) {
  // checksum manifest first
  std::map<std::string, std::uint64_t> expected;
  {
    const std::string manifest = read_text_file(dir + "/MANIFEST.txt");
    std::istringstream in(manifest);
    std::string name, hex;
    while (in >> name >> hex)
      expected[name] = std::stoull(hex, nullptr, 16);
  }

  ParsedCorpus corpus;
  std::map<std::string, std::string> texts;
  for (const auto& decl : kFixtureDecls) {
    const std::string path = dir + "/" + decl.file;
    const std::string text = read_text_file(path);
    auto it = expected.find(decl.file);
    if (it == expected.end())
      throw CorruptedFixtureError(std::string(decl.file) + " missing from MANIFEST.txt");
    if (fnv1a64(text) != it->second)
      throw CorruptedFixtureError(std::string(decl.file) +
                                  " does not match its manifest checksum");
    Fixture fx;
    fx.name = decl.name;
    fx.path = path;
    fx.checksum = it->second;
    fx.csv = parse_csv(text, decl.header);
    fx.source_citation = join_comments(fx.csv.comments);
    if (fx.source_citation.empty())
      throw CorruptedFixtureError(std::string(decl.file) + " lacks a source citation");
    corpus.fixtures_[decl.name] = std::move(fx);
    texts[decl.name] = text;
  }

  corpus.reported = parse_component_table(texts.at("table1"));
  corpus.reported.source_label = "1g:som;2g:none;ro:som";
  for (const auto& row : corpus.fixtures_.at("table1").csv.rows)
    corpus.qubit_order.push_back(row.cells[0]);

  for (const auto& row : corpus.fixtures_.at("readout_relfreq").csv.rows)
    corpus.relfreq_readout[row.cells[0]] = {
        parse_number(row.cells[1], row.line) / 100.0,
        parse_number(row.cells[2], row.line) / 100.0};

  for (const auto& row : corpus.fixtures_.at("one_gate").csv.rows)
    corpus.one_gate_retrieved[row.cells[0]] =
        parse_number(row.cells[1], row.line) / 1000.0;

  corpus.two_gate = parse_two_gate_table(texts.at("two_gate"));

  corpus.reported_filled = corpus.reported;
  for (const auto& row : corpus.fixtures_.at("one_gate_fallback").csv.rows) {
    const QubitId& q = row.cells[0];
    if (!corpus.reported_filled.has_one_gate(q))
      corpus.reported_filled.set_one_gate(
          q, parse_number(row.cells[1], row.line) / 1000.0);
  }
  if (!corpus.reported_filled.missing_one_gate().empty())
    throw CorruptedFixtureError("1-gate fallback does not cover every gap");
  for (const auto& [pair, e] : corpus.two_gate)
    corpus.reported_filled.set_two_gate(pair.first, pair.second, e);
  corpus.reported_filled.source_label = "1g:som+S23;2g:fig2b-colors;ro:som";

  corpus.legend = parse_legend(texts.at("legend"));
  corpus.one_gate_colors = parse_gate_colors(texts.at("one_gate_colors"));
  corpus.two_gate_colors = parse_gate_colors(texts.at("two_gate_colors"));
  return corpus;
}

ParsedCorpus load_fixtures() { return load_fixtures(default_fixture_directory()); }

//=============================================================================
// Sycamore circuits
//=============================================================================

namespace {

struct GridPos {
  int row = 0, col = 0;
};

GridPos grid_pos(const QubitId& q) {
  // ids look like q<row>_<col>
  const auto underscore = q.find('_');
  if (q.size() < 4 || q[0] != 'q' || underscore == std::string::npos)
    throw DomainError("qubit id not grid-shaped: " + q);
  return {static_cast<int>(parse_integer(q.substr(1, underscore - 1), 0)),
          static_cast<int>(parse_integer(q.substr(underscore + 1), 0))};
}

// coupler class within its family pattern
char classify(const QubitPair& pair, SycamoreFamily family) {
  const GridPos a = grid_pos(pair.first);
  const GridPos b = grid_pos(pair.second);
  const bool horizontal = a.row == b.row;
  if (family == SycamoreFamily::efgh) {
    if (horizontal) return std::min(a.col, b.col) % 2 == 0 ? 'E' : 'F';
    return std::min(a.row, b.row) % 2 == 0 ? 'G' : 'H';
  }
  const int parity = (std::min(a.row, b.row) + std::min(a.col, b.col)) % 2;
  if (horizontal) return parity ? 'C' : 'D';
  return parity ? 'B' : 'A';
}

}  // namespace

CircuitSpec sycamore_circuit(const ParsedCorpus& corpus, int n, int m,
                             SycamoreFamily family) {
  if (m < 0) throw DomainError("negative depth");
  CircuitSpec spec;
  spec.qubits = corpus.qubits_at(n);
  spec.depth = m;

  std::map<char, std::vector<QubitPair>> classes;
  for (const auto& pair : corpus.couplers_at(n))
    classes[classify(pair, family)].push_back(pair);

  const std::string pattern =
      family == SycamoreFamily::efgh ? "EFGH" : "ABCDCDAB";

  const auto one_gate_layer = [&spec] {
    GateLayer layer;
    layer.one_gates = spec.qubits;
    spec.layers.push_back(std::move(layer));
  };
  for (int cycle = 0; cycle < m; ++cycle) {
    one_gate_layer();
    GateLayer layer;
    const char cls = pattern[cycle % pattern.size()];
    if (auto it = classes.find(cls); it != classes.end())
      layer.two_gates = it->second;
    spec.layers.push_back(std::move(layer));
  }
  if (m >= 1) one_gate_layer();
  spec.validate();
  return spec;
}

}  // namespace rcsaudit
