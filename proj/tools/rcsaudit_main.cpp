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

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <thread>

#include "rcsaudit/error_models.hpp"
#include "rcsaudit/ingest.hpp"
#include "rcsaudit/report.hpp"
#include "rcsaudit/simulator.hpp"
#include "rcsaudit/svg.hpp"
#include "rcsaudit/version.hpp"

namespace rcsaudit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitToleranceFailure = 3;

struct GlobalOptions {
  int jobs = 1;
  std::uint64_t seed = 1;
  int precision = 4;  // significant digits
  std::string output;
  std::string fixtures_dir;
};

std::string format_sig(double v, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

// provenance line: tool version + digest of the input files
std::string provenance(const std::vector<std::string>& input_paths,
                       std::uint64_t seed) {
  std::string all;
  for (const auto& p : input_paths) all += read_text_file(p);
  std::ostringstream os;
  os << "# rcsaudit " << kVersion << " inputs=" << to_hex64(fnv1a64(all))
     << " seed=" << seed;
  return os.str();
}

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(global.output, text);
  }
}

ParsedCorpus load_corpus(const GlobalOptions& global) {
  return global.fixtures_dir.empty() ? load_fixtures()
                                     : load_fixtures(global.fixtures_dir);
}

// index-ordered parallel map; output order is independent of scheduling
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  const int used = std::min<std::size_t>(jobs, count);
  for (int w = 0; w < used; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += used) fn(i);
    });
  for (auto& t : workers) t.join();
}

//=============================================================================
// predict
//=============================================================================

struct PredictOptions {
  std::string model = "avg";
  int n = -1, m = -1;
  long long g1 = -1, g2 = -1;
  std::string family = "efgh";
  std::string one_gate_src = "avg";
  std::string two_gate_src = "avg";
  std::string readout_src = "avg";
  std::string rates_file;
  std::string two_gate_rates_file;
  std::string circuit_file;
  std::string refined_row;  // type,n,m
  double pred = -1.0;
  long long removed = -1;
  AveragedRates rates;
};

int run_predict(const GlobalOptions& global, const PredictOptions& opt) {
  std::ostringstream out;
  out << provenance({}, global.seed) << '\n';

  if (opt.model == "avg" || opt.model == "cycle") {
    long long g1 = opt.g1, g2 = opt.g2;
    int n = opt.n;
    if ((g1 < 0 && opt.model == "avg") || g2 < 0) {
      if (opt.n < 0 || opt.m < 0)
        throw Error("need --g1/--g2 or --n/--m to derive gate counts");
      const ParsedCorpus corpus = load_corpus(global);
      const CircuitSpec circuit = sycamore_circuit(
          corpus, opt.n, opt.m,
          opt.family == "abcd" ? SycamoreFamily::abcd : SycamoreFamily::efgh);
      g1 = static_cast<long long>(circuit.one_gate_count());
      g2 = static_cast<long long>(circuit.two_gate_count());
    }
    if (n < 0) throw Error("predict: --n is required");
    const FidelityPrediction pred =
        opt.model == "avg" ? predict_averaged(n, g1, g2, opt.rates)
                           : predict_cycle(n, g2, opt.rates);
    out << "model,n,g1,g2,prediction,inputs\n";
    out << opt.model << ',' << n << ',' << (opt.model == "avg" ? g1 : 0) << ','
        << g2 << ',' << format_sig(pred.value, global.precision) << ','
        << pred.inputs_digest << '\n';
    emit(global, out.str());
    return kExitOk;
  }

  if (opt.model == "refined") {
    if (opt.refined_row.empty())
      throw Error("predict --model refined needs --row type,n,m");
    std::string type;
    int n = 0, m = 0;
    {
      std::istringstream rs(opt.refined_row);
      std::string cell;
      if (!std::getline(rs, type, ',')) throw Error("bad --row");
      if (!std::getline(rs, cell, ',')) throw Error("bad --row");
      n = static_cast<int>(parse_integer(cell, 0));
      if (!std::getline(rs, cell, ',')) throw Error("bad --row");
      m = static_cast<int>(parse_integer(cell, 0));
    }
    const ParsedCorpus corpus = load_corpus(global);
    const Fixture& fx = corpus.fixture("table6");
    for (const auto& row : fx.csv.rows) {
      if (row.cells[0] != type || parse_integer(row.cells[1], row.line) != n ||
          parse_integer(row.cells[2], row.line) != m)
        continue;
      RefinedFactorRow factors;
      factors.circuit_type = type;
      factors.n = n;
      factors.m = m;
      factors.f_1gate = parse_number(row.cells[3], row.line) / 100.0;
      factors.f_2gate = parse_number(row.cells[4], row.line) / 100.0;
      factors.f_readout = parse_number(row.cells[5], row.line) / 100.0;
      factors.f_idle = parse_number(row.cells[7], row.line) / 100.0;
      factors.f_prep = parse_number(row.cells[8], row.line) / 100.0;
      const RefinedPrediction pred = predict_refined(factors);
      out << "circuit_type,n,m,product77,refined\n";
      out << type << ',' << n << ',' << m << ','
          << format_sig(pred.product77.value, global.precision) << ','
          << format_sig(pred.refined.value, global.precision) << '\n';
      emit(global, out.str());
      return kExitOk;
    }
    throw Error("no refined-model row " + opt.refined_row);
  }

  if (opt.model == "adj-patch") {
    if (opt.pred < 0 || opt.removed < 0)
      throw Error("predict --model adj-patch needs --pred and --removed");
    const FidelityPrediction pred =
        adjusted_patch_prediction(opt.pred, opt.removed, opt.rates.e2_avg);
    out << "pred_full,removed_2gates,e2_avg,adjusted,clamped\n";
    out << opt.pred << ',' << opt.removed << ',' << opt.rates.e2_avg << ','
        << format_sig(pred.value, global.precision) << ','
        << (pred.clamped ? 1 : 0) << '\n';
    emit(global, out.str());
    return kExitOk;
  }

  if (opt.model != "f77") throw Error("unknown model: " + opt.model);

  // formula-77 over an explicit circuit + rates, or over the fixture corpus
  CircuitSpec circuit;
  ComponentErrorTable table;
  std::string readout_note = opt.readout_src;
  double readout_override = -1.0;  // product replacing per-qubit readout
  if (!opt.circuit_file.empty()) {
    circuit = parse_circuit_file(read_text_file(opt.circuit_file)).spec;
  }
  if (!opt.rates_file.empty()) {
    table = parse_component_table(read_text_file(opt.rates_file));
    if (!opt.two_gate_rates_file.empty())
      for (const auto& [pair, e] :
           parse_two_gate_table(read_text_file(opt.two_gate_rates_file)))
        table.set_two_gate(pair.first, pair.second, e);
    table.source_label = "file:" + opt.rates_file;
    if (opt.circuit_file.empty())
      throw Error("--rates needs --circuit for the gate structure");
  } else {
    const ParsedCorpus corpus = load_corpus(global);
    if (opt.circuit_file.empty()) {
      if (opt.n < 0 || opt.m < 0) throw Error("predict f77 needs --n and --m");
      circuit = sycamore_circuit(
          corpus, opt.n, opt.m,
          opt.family == "abcd" ? SycamoreFamily::abcd : SycamoreFamily::efgh);
    }
    // assemble the table per requested rate sources
    const AveragedRates avg = opt.rates;
    table = corpus.reported_filled;
    if (opt.one_gate_src == "avg")
      for (const auto& q : circuit.qubits) table.set_one_gate(q, avg.e1_avg);
    if (opt.two_gate_src == "avg")
      for (const auto& [pair, _] : corpus.two_gate)
        table.set_two_gate(pair.first, pair.second, avg.e2_avg);
    if (opt.readout_src == "avg") {
      for (const auto& q : circuit.qubits)
        table.set_readout(q, {avg.eread_avg, avg.eread_avg});
    } else if (opt.readout_src == "rel-freq") {
      readout_override = corpus.relfreq_survival(static_cast<int>(circuit.n()));
    }
    table.source_label = "1g:" + opt.one_gate_src + ";2g:" + opt.two_gate_src +
                         ";ro:" + opt.readout_src;
  }
  FidelityPrediction pred = predict_formula77(circuit, table);
  if (readout_override >= 0.0) {
    // replace the per-qubit readout factor by the per-size aggregate
    std::vector<QubitId> qs = circuit.qubits;
    pred.value = pred.value / readout_survival_product(qs, table) * readout_override;
  }
  out << "model,n,m,g1,g2,prediction,inputs\n";
  out << "f77," << circuit.n() << ',' << circuit.depth << ','
      << circuit.one_gate_count() << ',' << circuit.two_gate_count() << ','
      << format_sig(pred.value, global.precision) << ',' << pred.inputs_digest
      << ";readout=" << readout_note << '\n';
  emit(global, out.str());
  return kExitOk;
}

//=============================================================================
// estimate
//=============================================================================

struct EstimateOptions {
  std::vector<std::string> stems;
  std::string samples_file, amplitudes_file;
  std::string svg_file;
};

int run_estimate(const GlobalOptions& global, const EstimateOptions& opt) {
  struct Job {
    std::string id, samples_path, amps_path;
  };
  std::vector<Job> jobs;
  if (!opt.samples_file.empty()) {
    if (opt.amplitudes_file.empty())
      throw Error("--samples needs --amplitudes (estimators require ideal probabilities)");
    jobs.push_back({opt.samples_file, opt.samples_file, opt.amplitudes_file});
  }
  for (const auto& stem : opt.stems)
    jobs.push_back({stem, stem + ".samples", stem + ".amps.csv"});
  if (jobs.empty()) throw Error("estimate: no inputs (give stems or --samples/--amplitudes)");

  std::vector<std::string> inputs;
  for (const auto& j : jobs) {
    inputs.push_back(j.samples_path);
    inputs.push_back(j.amps_path);
  }

  struct Row {
    std::string id;
    std::size_t count = 0;
    int n = 0;
    FidelityEstimate xeb, mle;
  };
  std::vector<Row> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  parallel_for(jobs.size(), global.jobs, [&](std::size_t i) {
    try {
      SampleSet samples = parse_samples(read_text_file(jobs[i].samples_path));
      attach_amplitudes(samples, parse_amplitudes(read_text_file(jobs[i].amps_path)));
      rows[i] = {jobs[i].id, samples.size(), samples.n(), xeb_linear(samples),
                 mle_fidelity(samples)};
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (!errors[i].empty())
      throw Error(jobs[i].samples_path + ": " + errors[i]);

  std::ostringstream out;
  out << provenance(inputs, global.seed) << '\n';
  out << "circuit,n,samples,xeb,xeb_stderr,mle,mle_feasible,mle_stderr\n";
  std::vector<FidelityEstimate> xebs, mles;
  for (const auto& r : rows) {
    out << r.id << ',' << r.n << ',' << r.count << ','
        << format_sig(r.xeb.value, global.precision) << ','
        << format_sig(r.xeb.std_error, global.precision) << ','
        << format_sig(r.mle.value, global.precision) << ','
        << (r.mle.feasible ? 1 : 0) << ','
        << format_sig(r.mle.std_error, global.precision) << '\n';
    xebs.push_back(r.xeb);
    mles.push_back(r.mle);
  }
  const auto summary = [&](const char* name, std::span<const FidelityEstimate> es) {
    out << "# mean_" << name << " all=" << format_sig(mean_fidelity(es, MeanMode::all), global.precision)
        << " winsorized=" << format_sig(mean_fidelity(es, MeanMode::winsorized), global.precision);
    try {
      out << " restricted=" << format_sig(mean_fidelity(es, MeanMode::restricted), global.precision);
    } catch (const EmptySelectionError&) {
      out << " restricted=NA";
    }
    out << '\n';
  };
  summary("xeb", xebs);
  summary("mle", mles);

  if (!opt.svg_file.empty()) {
    SvgSeries sx{"XEB", "#1f77b4", {}}, sm{"MLE", "#ff7f0e", {}};
    for (const auto& r : rows) {
      sx.points.push_back({static_cast<double>(r.n), r.xeb.value});
      if (r.mle.feasible) sm.points.push_back({static_cast<double>(r.n), r.mle.value});
    }
    SvgPlotOptions plot;
    plot.title = "fidelity estimates";
    plot.x_label = "qubits n";
    plot.y_label = "estimated fidelity";
    write_text_file(opt.svg_file, render_scatter_svg({sx, sm}, plot));
  }
  emit(global, out.str());
  return kExitOk;
}

//=============================================================================
// ones
//=============================================================================

struct OnesOptions {
  std::vector<std::string> sample_files;
  bool regress = false;
  std::string svg_file;
};

int run_ones(const GlobalOptions& global, const OnesOptions& opt) {
  if (opt.sample_files.empty()) throw Error("ones: no sample files");
  std::ostringstream out;
  out << provenance(opt.sample_files, global.seed) << '\n';
  out << "file,circuit,m,samples,ones_overall,zeros_minus_ones_pct\n";
  std::vector<std::pair<double, double>> points;
  for (const auto& path : opt.sample_files) {
    const SampleSet samples = parse_samples(read_text_file(path));
    const OnesStatistics stats = ones_statistics(samples);
    out << path << ',' << samples.circuit_id << ',' << samples.depth << ','
        << samples.size() << ',' << format_sig(stats.overall, global.precision)
        << ',' << format_sig(stats.zeros_minus_ones_pct, global.precision) << '\n';
    if (samples.depth >= 0)
      points.push_back({static_cast<double>(samples.depth), stats.overall});
  }
  RegressionResult reg;
  bool have_reg = false;
  if (opt.regress) {
    if (points.size() < 3)
      throw Error("ones --regress needs >= 3 sample files with m metadata");
    reg = depth_regression(points);
    have_reg = true;
    out << "# regression slope=" << format_sig(reg.slope, global.precision)
        << " stderr=" << format_sig(reg.slope_stderr, global.precision)
        << " intercept=" << format_sig(reg.intercept, global.precision)
        << " p_value=" << format_sig(reg.p_value, global.precision) << '\n';
  }
  if (!opt.svg_file.empty()) {
    SvgSeries s{"ones proportion", "#2ca02c", points};
    SvgPlotOptions plot;
    plot.title = "proportion of measured 1s vs depth";
    plot.x_label = "cycles m";
    plot.y_label = "proportion of 1s";
    if (have_reg) plot.fit_slope_intercept = {reg.slope, reg.intercept};
    write_text_file(opt.svg_file, render_scatter_svg({s}, plot));
  }
  emit(global, out.str());
  return kExitOk;
}

//=============================================================================
// legend
//=============================================================================

struct LegendOptions {
  std::string legend_file, colors_file;
  int density = 99;
};

int run_legend(const GlobalOptions& global, const LegendOptions& opt) {
  const ColorLegend legend =
      parse_legend(read_text_file(opt.legend_file), opt.density);
  const auto colors = parse_gate_colors(read_text_file(opt.colors_file));
  const LegendTable table = build_legend_table(legend);
  const auto matches = extract_gate_errors(table, colors);
  const ErrorAggregates agg = aggregate_errors(matches);

  std::ostringstream out;
  out << provenance({opt.legend_file, opt.colors_file}, global.seed) << '\n';
  out << "gate_id,error_rate,l1_distance\n";
  out.precision(10);
  for (const auto& [gate, match] : matches)
    out << gate << ',' << match.value << ',' << match.distance << '\n';
  out << "# entries=" << table.entries.size() << " mean=" << format_sig(agg.mean, global.precision)
      << " median=" << format_sig(agg.median, global.precision)
      << " min=" << format_sig(agg.min, global.precision)
      << " max=" << format_sig(agg.max, global.precision) << '\n';
  emit(global, out.str());
  return kExitOk;
}

//=============================================================================
// simulate
//=============================================================================

struct SimulateOptions {
  int n = 4, m = 0;
  long long count = 100;
  double phi = 1.0;
  double q01 = -1.0, q10 = -1.0;
  double gamma = 0.0;
  std::string coupling = "complete";
  std::string config_file;
  std::string out_prefix = "sim";
};

int run_simulate(const GlobalOptions& global, SimulateOptions opt) {
  if (!opt.config_file.empty()) {
    const auto cfg = parse_keyvalue_config(read_text_file(opt.config_file));
    const auto get = [&](const char* key, auto& target) {
      auto it = cfg.find(key);
      if (it == cfg.end()) return;
      std::istringstream is(it->second);
      is >> target;
      if (is.fail()) throw Error(std::string("bad config value for ") + key);
    };
    get("n", opt.n);
    get("m", opt.m);
    get("count", opt.count);
    get("phi", opt.phi);
    get("q01", opt.q01);
    get("q10", opt.q10);
    get("gamma", opt.gamma);
    get("coupling", opt.coupling);
  }

  RandomCircuitConfig config;
  config.n = opt.n;
  config.m = opt.m;
  config.seed = global.seed;
  if (opt.coupling == "complete") {
    for (int a = 0; a < opt.n; ++a)
      for (int b = a + 1; b < opt.n; ++b) config.coupling.push_back({a, b});
  } else if (opt.coupling == "ring") {
    for (int a = 0; a < opt.n && opt.n > 1; ++a)
      config.coupling.push_back({a, (a + 1) % opt.n});
  } else {
    throw Error("unknown coupling: " + opt.coupling);
  }
  if (opt.m == 0) config.coupling.clear();

  NoiseConfig noise;
  noise.global_fidelity = opt.phi;
  noise.damping_gamma = std::max(opt.gamma, 0.0);
  if (opt.q01 >= 0.0 || opt.q10 >= 0.0)
    noise.readout.assign(
        opt.n, ReadoutErrorPair{std::max(opt.q01, 0.0), std::max(opt.q10, 0.0)});

  const GateCircuit circuit = generate_random_circuit(config);
  const StateVector state = simulate_ideal(circuit);
  SampleSet samples = sample_with_fidelity(
      state, noise.global_fidelity, static_cast<std::size_t>(opt.count),
      derive_stream_seed(global.seed, 1));
  if (!noise.readout.empty())
    samples = apply_readout_channel(samples, noise.readout,
                                    derive_stream_seed(global.seed, 2));
  if (noise.damping_gamma > 0.0)
    samples = apply_damping(samples, noise.damping_gamma, opt.m,
                            derive_stream_seed(global.seed, 3));
  samples.depth = opt.m;
  samples.circuit_id = "rc-n" + std::to_string(opt.n) + "-m" + std::to_string(opt.m) +
                       "-seed" + std::to_string(global.seed);
  samples.qubit_ids = circuit.spec.qubits;

  CircuitFile file;
  file.spec = circuit.spec;
  file.seed = global.seed;
  file.has_seed = true;
  file.coupling = config.coupling;
  write_text_file(opt.out_prefix + ".circuit", serialize_circuit_file(file));
  write_text_file(opt.out_prefix + ".samples", serialize_samples(samples));
  write_text_file(opt.out_prefix + ".amps.csv", serialize_amplitudes(samples));
  std::cout << "wrote " << opt.out_prefix << ".circuit/.samples/.amps.csv ("
            << samples.size() << " samples, |G1|=" << circuit.spec.one_gate_count()
            << ", |G2|=" << circuit.spec.two_gate_count() << ")\n";
  return kExitOk;
}

//=============================================================================
// report
//=============================================================================

int run_report_cmd(const GlobalOptions& global, const std::string& target_name,
                   const std::string& columns) {
  const ParsedCorpus corpus = load_corpus(global);
  if (target_name == "gap") {
    const GapReport gap = formula77_gap_report(corpus);
    emit(global, gap.render_csv());
    return kExitOk;
  }
  const ReportTarget target = parse_report_target(target_name);
  TableReport report = run_report(corpus, target);
  filter_report_columns(report, columns);
  std::ostringstream out;
  out << "# rcsaudit " << kVersion << " report " << to_string(target) << '\n';
  out << report.render_csv();
  emit(global, out.str());
  std::cout << report.diff_summary();
  return report.all_ok() ? kExitOk : kExitToleranceFailure;
}

}  // namespace
}  // namespace rcsaudit

int main(int argc, char** argv) {
  using namespace rcsaudit;
  CLI::App app{"fidelity-audit toolkit for random-circuit-sampling experiments"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--jobs", global.jobs, "worker threads for per-circuit fan-out");
  app.add_option("--seed", global.seed, "base RNG seed");
  app.add_option("--precision", global.precision, "significant digits in output");
  app.add_option("--output", global.output, "write primary output to this file");
  app.add_option("--fixtures", global.fixtures_dir,
                 "fixture directory (default: RCSAUDIT_FIXTURES or built-in)");

  PredictOptions popt;
  auto* predict = app.add_subcommand("predict", "digital error-model predictions");
  predict->add_option("--model", popt.model, "avg|cycle|f77|refined|adj-patch");
  predict->add_option("--n", popt.n);
  predict->add_option("--m", popt.m);
  predict->add_option("--g1", popt.g1);
  predict->add_option("--g2", popt.g2);
  predict->add_option("--family", popt.family, "efgh|abcd");
  predict->add_option("--one-gate", popt.one_gate_src, "avg|qb-spec");
  predict->add_option("--two-gate", popt.two_gate_src, "avg|gate-spec");
  predict->add_option("--readout", popt.readout_src, "avg|qb-spec|rel-freq");
  predict->add_option("--rates", popt.rates_file, "component-table CSV");
  predict->add_option("--two-gate-rates", popt.two_gate_rates_file);
  predict->add_option("--circuit", popt.circuit_file, "circuit file");
  predict->add_option("--row", popt.refined_row, "refined row: type,n,m");
  predict->add_option("--pred", popt.pred, "full-circuit prediction (adj-patch)");
  predict->add_option("--removed", popt.removed, "removed 2-gate count (adj-patch)");
  predict->add_option("--e1", popt.rates.e1_avg);
  predict->add_option("--e2", popt.rates.e2_avg);
  predict->add_option("--eread", popt.rates.eread_avg);
  predict->add_option("--e2cycle", popt.rates.e2cycle_avg);

  EstimateOptions eopt;
  auto* estimate = app.add_subcommand("estimate", "XEB and MLE fidelity estimates");
  estimate->add_option("stems", eopt.stems, "input stems (<stem>.samples + <stem>.amps.csv)");
  estimate->add_option("--samples", eopt.samples_file);
  estimate->add_option("--amplitudes", eopt.amplitudes_file);
  estimate->add_option("--svg", eopt.svg_file, "scatter plot output");

  OnesOptions oopt;
  auto* ones = app.add_subcommand("ones", "proportion-of-1s statistics");
  ones->add_option("samples", oopt.sample_files, "sample files");
  ones->add_flag("--regress", oopt.regress, "OLS of proportion against depth");
  ones->add_option("--svg", oopt.svg_file, "scatter plot output");

  LegendOptions lopt;
  auto* legend = app.add_subcommand("legend", "retrieve error rates from colors");
  legend->add_option("--legend", lopt.legend_file, "legend anchors CSV")->required();
  legend->add_option("--colors", lopt.colors_file, "gate colors CSV")->required();
  legend->add_option("--density", lopt.density, "interpolated points per interval");

  SimulateOptions sopt;
  auto* simulate = app.add_subcommand("simulate", "seeded random-circuit sampler");
  simulate->add_option("--n", sopt.n);
  simulate->add_option("--m", sopt.m);
  simulate->add_option("--count", sopt.count);
  simulate->add_option("--phi", sopt.phi, "mixture fidelity");
  simulate->add_option("--q01", sopt.q01, "readout 0->1 flip probability");
  simulate->add_option("--q10", sopt.q10, "readout 1->0 flip probability");
  simulate->add_option("--gamma", sopt.gamma, "per-cycle damping");
  simulate->add_option("--coupling", sopt.coupling, "complete|ring");
  simulate->add_option("--config", sopt.config_file, "key=value config file");
  simulate->add_option("--out", sopt.out_prefix, "output file prefix");

  std::string report_target, report_columns;
  auto* report = app.add_subcommand("report", "regenerate a shipped table and diff it");
  report->add_option("target", report_target, "table2..table6, gate_tables, gap")->required();
  report->add_option("--columns", report_columns,
                     "restrict the diff to these columns (aliases: D,G,ratios,combined,adj)");
  report->add_flag_callback("--combined",
                            [&report_columns] { report_columns = "combined"; },
                            "diff only the combined-product columns");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  // exit-code contract: 0 success, 2 input error, 3 tolerance failure
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*predict) return run_predict(global, popt);
    if (*estimate) return run_estimate(global, eopt);
    if (*ones) return run_ones(global, oopt);
    if (*legend) return run_legend(global, lopt);
    if (*simulate) return run_simulate(global, sopt);
    if (*report) return run_report_cmd(global, report_target, report_columns);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
