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

#include <span>

#include "rcsaudit/types.hpp"

namespace rcsaudit {

// Product of (1 - e) over a list of component error probabilities.
// Switches to log-space accumulation above 64 factors to bound drift.
double survival_product(std::span<const double> errors);

// (1 - e)^count via exp(count * log1p(-e)); exact for e in {0, 1}.
double survival_power(double e, long long count);

//=============================================================================
// Digital error-model predictions
//=============================================================================

// Full component product: (1-e_g) over all 1-gates and 2-gates of the
// circuit times (1-e_q) over the measured qubits, with per-qubit readout
// error (q01+q10)/2. Every referenced component must have a rate.
FidelityPrediction predict_formula77(const CircuitSpec& circuit,
                                     const ComponentErrorTable& table);

// Averaged approximation: (1-e1)^g1 (1-e2)^g2 (1-eread)^n.
FidelityPrediction predict_averaged(long long n, long long g1, long long g2,
                                    const AveragedRates& rates = {});

// 2-gate-cycle approximation: (1-e2cycle)^g2 (1-eread)^n.
FidelityPrediction predict_cycle(long long n, long long g2,
                                 const AveragedRates& rates = {});

// Relative deviation of the component product under unbiased rate errors of
// the given relative accuracy:
//   rel_accuracy * (sqrt(n) eread + sqrt(g1) e1 + sqrt(g2) e2)
double deviation_estimate(long long n, long long g1, long long g2,
                          const AveragedRates& rates, double rel_accuracy);

// Probability of no readout error over the given qubits:
// product of (1 - (q01+q10)/2).
double readout_survival_product(std::span<const QubitId> qubits,
                                const ComponentErrorTable& table);

// Factor products of the refined discrete-error model: the base product
// f_1gate * f_2gate * f_readout and its refinement by f_idle * f_prep.
RefinedPrediction predict_refined(const RefinedFactorRow& row);

// Full-circuit prediction rescaled for `removed_two_gates` couplings absent
// from a patch circuit: pred * (1-e2)^(-a). Clamped into [0,1] and flagged
// when the extrapolation leaves the unit interval.
FidelityPrediction adjusted_patch_prediction(double pred_full,
                                             long long removed_two_gates,
                                             double e2_avg);

// Patch circuits are estimated per patch and multiplied.
double combine_patch_fidelities(double f_patch1, double f_patch2);

// Smallest integer a with pred * (1-e2)^(-a) closest to the target adjusted
// prediction; used to recover removed-2-gate counts from published rows.
long long back_solve_removed_gates(double pred_full, double adjusted,
                                   double e2_avg);

}  // namespace rcsaudit
