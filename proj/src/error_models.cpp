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

#include "rcsaudit/error_models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace rcsaudit {

//=============================================================================
// CircuitSpec
//=============================================================================

std::size_t CircuitSpec::one_gate_count() const {
  std::size_t c = 0;
  for (const auto& layer : layers) c += layer.one_gates.size();
  return c;
}

std::size_t CircuitSpec::two_gate_count() const {
  std::size_t c = 0;
  for (const auto& layer : layers) c += layer.two_gates.size();
  return c;
}

int CircuitSpec::qubit_index(const QubitId& q) const {
  auto it = std::find(qubits.begin(), qubits.end(), q);
  return it == qubits.end() ? -1 : static_cast<int>(it - qubits.begin());
}

void CircuitSpec::validate() const {
  std::set<QubitId> known(qubits.begin(), qubits.end());
  if (known.size() != qubits.size())
    throw DomainError("duplicate qubit in circuit qubit list");
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& layer = layers[li];
    std::set<QubitId> busy;
    for (const auto& q : layer.one_gates)
      if (!known.count(q))
        throw DomainError("layer " + std::to_string(li + 1) +
                          ": 1-gate on unknown qubit " + q);
    for (const auto& [a, b] : layer.two_gates) {
      if (!known.count(a) || !known.count(b))
        throw DomainError("layer " + std::to_string(li + 1) +
                          ": 2-gate on unknown qubit " + a + "," + b);
      if (!busy.insert(a).second || !busy.insert(b).second)
        throw DomainError("layer " + std::to_string(li + 1) +
                          ": overlapping 2-gates at " + a + "," + b);
    }
  }
  if (patch_partition) {
    const auto& [p1, p2] = *patch_partition;
    std::set<QubitId> s1(p1.begin(), p1.end()), s2(p2.begin(), p2.end());
    for (const auto& q : s1)
      if (s2.count(q)) throw DomainError("patches share qubit " + q);
    for (const auto& layer : layers)
      for (const auto& [a, b] : layer.two_gates)
        if (s1.count(a) != s1.count(b) || s2.count(a) != s2.count(b))
          throw DomainError("2-gate spans the patch cut: " + a + "," + b);
  }
}

CircuitSpec CircuitSpec::restricted_to(const std::vector<QubitId>& subset) const {
  std::set<QubitId> keep(subset.begin(), subset.end());
  CircuitSpec out;
  out.depth = depth;
  for (const auto& q : qubits)
    if (keep.count(q)) out.qubits.push_back(q);
  for (const auto& layer : layers) {
    GateLayer l;
    for (const auto& q : layer.one_gates)
      if (keep.count(q)) l.one_gates.push_back(q);
    for (const auto& p : layer.two_gates)
      if (keep.count(p.first) && keep.count(p.second)) l.two_gates.push_back(p);
    out.layers.push_back(std::move(l));
  }
  return out;
}

const char* to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::formula77: return "formula77";
    case ModelTag::averaged: return "averaged";
    case ModelTag::cycle: return "cycle";
    case ModelTag::refined: return "refined";
    case ModelTag::adjusted_patch: return "adjusted_patch";
  }
  return "?";
}

//=============================================================================
// Products
//=============================================================================

double survival_product(std::span<const double> errors) {
  if (errors.size() <= 64) {
    double p = 1.0;
    for (double e : errors) p *= (1.0 - e);
    return p;
  }
  double lg = 0.0;
  for (double e : errors) lg += std::log1p(-e);
  return std::exp(lg);
}

double survival_power(double e, long long count) {
  if (count == 0) return 1.0;
  if (e >= 1.0) return 0.0;
  return std::exp(static_cast<double>(count) * std::log1p(-e));
}

//=============================================================================
// Predictions
//=============================================================================

namespace {

void check_counts(long long n, long long g1, long long g2) {
  if (n < 0 || g1 < 0 || g2 < 0)
    throw DomainError("negative component count");
}

std::string digest(const std::string& label, long long n, long long g1,
                   long long g2) {
  std::ostringstream os;
  if (!label.empty()) os << label << ";";
  os << "n=" << n << ",g1=" << g1 << ",g2=" << g2;
  return os.str();
}

}  // namespace

FidelityPrediction predict_formula77(const CircuitSpec& circuit,
                                     const ComponentErrorTable& table) {
  std::vector<double> errors;
  errors.reserve(circuit.one_gate_count() + circuit.two_gate_count() +
                 circuit.n());
  for (const auto& layer : circuit.layers) {
    for (const auto& q : layer.one_gates)
      errors.push_back(table.one_gate_error(q));
    for (const auto& [a, b] : layer.two_gates)
      errors.push_back(table.two_gate_error(a, b));
  }
  for (const auto& q : circuit.qubits)
    errors.push_back(table.readout_error(q).mean());

  FidelityPrediction pred;
  pred.value = survival_product(errors);
  pred.model_tag = ModelTag::formula77;
  pred.inputs_digest =
      digest(table.source_label, static_cast<long long>(circuit.n()),
             static_cast<long long>(circuit.one_gate_count()),
             static_cast<long long>(circuit.two_gate_count()));
  return pred;
}

FidelityPrediction predict_averaged(long long n, long long g1, long long g2,
                                    const AveragedRates& rates) {
  check_counts(n, g1, g2);
  FidelityPrediction pred;
  pred.value = survival_power(rates.e1_avg, g1) *
               survival_power(rates.e2_avg, g2) *
               survival_power(rates.eread_avg, n);
  pred.model_tag = ModelTag::averaged;
  pred.inputs_digest = digest("avg-rates", n, g1, g2);
  return pred;
}

FidelityPrediction predict_cycle(long long n, long long g2,
                                 const AveragedRates& rates) {
  check_counts(n, 0, g2);
  FidelityPrediction pred;
  pred.value = survival_power(rates.e2cycle_avg, g2) *
               survival_power(rates.eread_avg, n);
  pred.model_tag = ModelTag::cycle;
  pred.inputs_digest = digest("cycle-rates", n, 0, g2);
  return pred;
}

double deviation_estimate(long long n, long long g1, long long g2,
                          const AveragedRates& rates, double rel_accuracy) {
  check_counts(n, g1, g2);
  if (rel_accuracy < 0) throw DomainError("negative relative accuracy");
  return rel_accuracy *
         (std::sqrt(static_cast<double>(n)) * rates.eread_avg +
          std::sqrt(static_cast<double>(g1)) * rates.e1_avg +
          std::sqrt(static_cast<double>(g2)) * rates.e2_avg);
}

double readout_survival_product(std::span<const QubitId> qubits,
                                const ComponentErrorTable& table) {
  std::vector<double> errors;
  errors.reserve(qubits.size());
  for (const auto& q : qubits)
    errors.push_back(table.readout_error(q).mean());
  return survival_product(errors);
}

RefinedPrediction predict_refined(const RefinedFactorRow& row) {
  for (double f : {row.f_1gate, row.f_2gate, row.f_readout, row.f_idle, row.f_prep})
    check_probability(f, "refined-model factor");
  RefinedPrediction pred;
  const double d = row.f_1gate * row.f_2gate * row.f_readout;
  pred.product77 = {d, ModelTag::formula77,
                    "refined-row:" + row.circuit_type + "," +
                        std::to_string(row.n) + "," + std::to_string(row.m),
                    false};
  pred.refined = {d * row.f_idle * row.f_prep, ModelTag::refined,
                  pred.product77.inputs_digest, false};
  return pred;
}

FidelityPrediction adjusted_patch_prediction(double pred_full,
                                             long long removed_two_gates,
                                             double e2_avg) {
  check_probability(pred_full, "full-circuit prediction");
  check_probability(e2_avg, "average 2-gate error");
  if (removed_two_gates < 0) throw DomainError("negative removed-gate count");
  FidelityPrediction pred;
  pred.model_tag = ModelTag::adjusted_patch;
  pred.inputs_digest = "a=" + std::to_string(removed_two_gates);
  pred.value = pred_full / survival_power(e2_avg, removed_two_gates);
  if (pred.value > 1.0) {
    pred.value = 1.0;
    pred.clamped = true;
  } else if (pred.value < 0.0) {
    pred.value = 0.0;
    pred.clamped = true;
  }
  return pred;
}

double combine_patch_fidelities(double f_patch1, double f_patch2) {
  // estimator outputs may lie slightly outside [0,1]; any real is accepted
  return f_patch1 * f_patch2;
}

long long back_solve_removed_gates(double pred_full, double adjusted,
                                   double e2_avg) {
  if (pred_full <= 0 || adjusted <= 0)
    throw DomainError("back-solve needs positive predictions");
  const double a = std::log(adjusted / pred_full) / -std::log1p(-e2_avg);
  return std::llround(a);
}

}  // namespace rcsaudit
