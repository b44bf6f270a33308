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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcsaudit/errors.hpp"

namespace rcsaudit {

using QubitId = std::string;

// Unordered pair of distinct qubits, stored in canonical (sorted) order.
using QubitPair = std::pair<QubitId, QubitId>;

inline QubitPair make_qubit_pair(QubitId a, QubitId b) {
  if (a == b) throw DomainError("qubit pair with identical qubits: " + a);
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

//=============================================================================
// Component error rates
//=============================================================================

// Asymmetric readout error probabilities: P(read 1 | prepared 0) and
// P(read 0 | prepared 1). Unitless fractions.
struct ReadoutErrorPair {
  double q01 = 0.0;
  double q10 = 0.0;

  // the symmetric rate used in survival products
  double mean() const { return 0.5 * (q01 + q10); }
};

inline void check_probability(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError(what + " out of [0,1]: " + std::to_string(p));
}

// Per-component error rates of one processor: per-qubit readout pairs,
// per-qubit 1-gate errors, per-coupler 2-gate errors, and the circuit-size
// insertion order n_ins of each qubit. All rates are unitless fractions;
// percentage/per-mille conversion happens exactly once, at ingest.
class ComponentErrorTable {
 public:
  void set_readout(const QubitId& q, ReadoutErrorPair pair) {
    check_probability(pair.q01, "q01(" + q + ")");
    check_probability(pair.q10, "q10(" + q + ")");
    readout_[q] = pair;
  }
  void set_one_gate(const QubitId& q, double e) {
    check_probability(e, "one-gate error(" + q + ")");
    one_gate_[q] = e;
  }
  void set_two_gate(const QubitId& a, const QubitId& b, double e) {
    check_probability(e, "two-gate error(" + a + "," + b + ")");
    two_gate_[make_qubit_pair(a, b)] = e;
  }
  void set_insertion_order(const QubitId& q, int n_ins) {
    if (n_ins < 1) throw DomainError("insertion order < 1 for " + q);
    insertion_order_[q] = n_ins;
  }

  const ReadoutErrorPair& readout_error(const QubitId& q) const {
    auto it = readout_.find(q);
    if (it == readout_.end())
      throw MissingComponentError("no readout error for qubit " + q);
    return it->second;
  }
  double one_gate_error(const QubitId& q) const {
    auto it = one_gate_.find(q);
    if (it == one_gate_.end())
      throw MissingComponentError("no 1-gate error for qubit " + q);
    return it->second;
  }
  double two_gate_error(const QubitId& a, const QubitId& b) const {
    auto it = two_gate_.find(make_qubit_pair(a, b));
    if (it == two_gate_.end())
      throw MissingComponentError("no 2-gate error for pair " + a + "," + b);
    return it->second;
  }
  int insertion_order(const QubitId& q) const {
    auto it = insertion_order_.find(q);
    if (it == insertion_order_.end())
      throw MissingComponentError("no insertion order for qubit " + q);
    return it->second;
  }

  bool has_readout(const QubitId& q) const { return readout_.count(q) != 0; }
  bool has_one_gate(const QubitId& q) const { return one_gate_.count(q) != 0; }
  bool has_two_gate(const QubitId& a, const QubitId& b) const {
    return two_gate_.count(make_qubit_pair(a, b)) != 0;
  }

  const std::map<QubitId, ReadoutErrorPair>& readout() const { return readout_; }
  const std::map<QubitId, double>& one_gate() const { return one_gate_; }
  const std::map<QubitPair, double>& two_gate() const { return two_gate_; }
  const std::map<QubitId, int>& insertion_order() const { return insertion_order_; }

  // Qubits present in the readout map but without a 1-gate rate. The 2020
  // Sycamore file is known to omit one of them.
  std::vector<QubitId> missing_one_gate() const {
    std::vector<QubitId> out;
    for (const auto& [q, _] : readout_)
      if (!one_gate_.count(q)) out.push_back(q);
    return out;
  }

  // free-form description of where the rates came from; propagated into
  // FidelityPrediction::inputs_digest
  std::string source_label;

 private:
  std::map<QubitId, ReadoutErrorPair> readout_;
  std::map<QubitId, double> one_gate_;
  std::map<QubitPair, double> two_gate_;
  std::map<QubitId, int> insertion_order_;
};

// Fleet-average rates. Defaults are the Sycamore values under simultaneous
// operation (1-gate, 2-gate, readout, combined 2-gate cycle).
struct AveragedRates {
  double e1_avg = 0.0016;
  double e2_avg = 0.0062;
  double eread_avg = 0.038;
  double e2cycle_avg = 0.0093;
};

//=============================================================================
// Circuit structure
//=============================================================================

// One layer of a circuit: 1-gate sites and/or disjoint 2-gate pairs.
struct GateLayer {
  std::vector<QubitId> one_gates;
  std::vector<QubitPair> two_gates;
};

// Structural description of a circuit: qubit list (in measurement order),
// depth in cycles, gate layers, optional split into two patches.
struct CircuitSpec {
  std::vector<QubitId> qubits;
  int depth = 0;  // cycles m
  std::vector<GateLayer> layers;
  std::optional<std::pair<std::vector<QubitId>, std::vector<QubitId>>> patch_partition;

  std::size_t n() const { return qubits.size(); }
  std::size_t one_gate_count() const;
  std::size_t two_gate_count() const;

  // index of a qubit in the measurement order; -1 if absent
  int qubit_index(const QubitId& q) const;

  // throws DomainError on any violated invariant
  void validate() const;

  // sub-circuit on the given qubit subset: keeps 1-gates on kept qubits and
  // 2-gates with both endpoints kept
  CircuitSpec restricted_to(const std::vector<QubitId>& subset) const;
};

//=============================================================================
// Predictions
//=============================================================================

enum class ModelTag { formula77, averaged, cycle, refined, adjusted_patch };

const char* to_string(ModelTag tag);

// A digital-error-model fidelity prediction.
struct FidelityPrediction {
  double value = 1.0;
  ModelTag model_tag = ModelTag::formula77;
  std::string inputs_digest;
  // adjusted-patch extrapolations can exceed 1; they are clamped and flagged
  bool clamped = false;
};

// One row of the refined discrete-error model: per-factor fidelities.
struct RefinedFactorRow {
  double f_1gate = 1.0;
  double f_2gate = 1.0;
  double f_readout = 1.0;
  double f_idle = 1.0;
  double f_prep = 1.0;
  std::string circuit_type;  // full | 2-patch | 4-patch
  int n = 0;
  int m = 0;
};

// The plain product of gate/readout factors and its refinement by the
// idle-gate and preparation factors.
struct RefinedPrediction {
  FidelityPrediction product77;
  FidelityPrediction refined;
};

}  // namespace rcsaudit
