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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcsaudit/types.hpp"

namespace rcsaudit {

//=============================================================================
// Measured bitstring samples
//=============================================================================

// Bitstrings of one circuit in measurement order, optionally paired with the
// ideal output probability of each sampled string. Bits are stored row-major;
// the leftmost bitstring character is the first qubit of the circuit's qubit
// order.
class SampleSet {
 public:
  SampleSet() = default;
  explicit SampleSet(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t size() const { return n_ == 0 ? 0 : bits_.size() / n_; }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t sample, int qubit) const {
    return bits_[sample * n_ + qubit];
  }
  void set_bit(std::size_t sample, int qubit, int value) {
    bits_[sample * n_ + qubit] = static_cast<std::uint8_t>(value);
  }

  void append(std::span<const std::uint8_t> bits);
  void append_bitstring(const std::string& bits, long source_line = 0);
  std::string bitstring(std::size_t sample) const;

  bool has_ideal_probs() const { return ideal_probs_.has_value(); }
  const std::vector<double>& ideal_probs() const;
  void set_ideal_probs(std::vector<double> probs);

  std::string circuit_id;
  int depth = -1;  // cycles m; -1 when unknown
  // measurement-order qubit names; empty when the source file names none
  std::vector<QubitId> qubit_ids;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
  std::optional<std::vector<double>> ideal_probs_;
};

//=============================================================================
// Fidelity estimators
//=============================================================================

enum class EstimatorTag { xeb, mle };

struct FidelityEstimate {
  double value = 0.0;
  EstimatorTag estimator_tag = EstimatorTag::xeb;
  std::size_t sample_count = 0;
  // for MLE: true iff the monotone score has a root in [0,1]; boundary
  // maximizers are reported with feasible = false
  bool feasible = true;
  double std_error = 0.0;
};

// Linear cross-entropy benchmarking: 2^n * mean(p(x_i)) - 1. Unconstrained.
FidelityEstimate xeb_linear(const SampleSet& samples);

// Maximum-likelihood fidelity under the mixture phi*p(x) + (1-phi)*2^-n.
// The score sum_i d_i/(1+phi*d_i), d_i = 2^n p(x_i) - 1, is strictly
// decreasing; the root is found by bisection to 1e-10.
FidelityEstimate mle_fidelity(const SampleSet& samples);

enum class MeanMode { all, winsorized, restricted };

// all: plain mean; winsorized: clamp each value into [0,1] first;
// restricted: mean over values already in [0,1] (infeasible MLE estimates,
// which sit at the boundary by convention, are excluded).
double mean_fidelity(std::span<const FidelityEstimate> estimates, MeanMode mode);

//=============================================================================
// Bitstring statistics
//=============================================================================

struct OnesStatistics {
  std::map<QubitId, double> per_qubit;  // keyed by qubit position label
  std::vector<double> per_qubit_by_index;
  double overall = 0.0;
  double zeros_minus_ones_pct = 0.0;  // 100 * (1 - 2*overall)
};

OnesStatistics ones_statistics(const SampleSet& samples);

// Expected proportion of 1s when measuring right after initialization of a
// uniformly random computational basis state: 1/2 + (q01 - q10)/2.
double predicted_ones_at_zero_depth(const ReadoutErrorPair& pair);

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double p_value = 1.0;  // two-sided t test of slope = 0
};

// Ordinary least squares of proportion against depth m.
RegressionResult depth_regression(std::span<const std::pair<double, double>> points);

}  // namespace rcsaudit
