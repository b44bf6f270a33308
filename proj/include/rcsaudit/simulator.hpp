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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "rcsaudit/estimators.hpp"
#include "rcsaudit/types.hpp"

namespace rcsaudit {

//=============================================================================
// Deterministic RNG streams
//=============================================================================

// splitmix64 step; the generator behind all randomized operations
std::uint64_t splitmix64(std::uint64_t& state);

// Stream seed derivation: task k gets splitmix64 applied k+1 times to the
// base seed. Parallel tasks draw from disjoint streams derived this way.
std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t task);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // warm up so nearby seeds decorrelate
    next();
    next();
  }
  std::uint64_t next() { return splitmix64(state_); }
  // uniform in [0,1), 53-bit resolution
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // standard normal (Box-Muller, cached spare)
  double normal();
  // uniform integer in [0, bound)
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

//=============================================================================
// State vector
//=============================================================================

// dense amplitudes cap: 2^24 * 16 bytes = 256 MiB
inline constexpr int kMaxStateQubits = 24;

// Exact 2^n-amplitude state. Qubit i of the circuit's measurement order maps
// to bit i of the amplitude index (first qubit = least significant bit).
class StateVector {
 public:
  explicit StateVector(int n, std::uint64_t basis_index = 0);

  int n() const { return n_; }
  std::uint64_t dim() const { return amplitudes.size(); }

  void apply_one_gate(const Eigen::Matrix2cd& u, int qubit);
  // local basis order: bit of `a` is the low bit, bit of `b` the high bit
  void apply_two_gate(const Eigen::Matrix4cd& u, int a, int b);

  double norm_squared() const { return amplitudes.squaredNorm(); }
  double probability(std::uint64_t index) const {
    return std::norm(amplitudes(static_cast<Eigen::Index>(index)));
  }
  Eigen::VectorXd probabilities() const { return amplitudes.cwiseAbs2(); }

  Eigen::VectorXcd amplitudes;

 private:
  int n_;
};

//=============================================================================
// Circuits with gate matrices
//=============================================================================

struct GateOp {
  int a = -1;  // first target (qubit index in measurement order)
  int b = -1;  // second target; -1 for 1-gates
  Eigen::Matrix4cd u4 = Eigen::Matrix4cd::Identity();
  Eigen::Matrix2cd u2 = Eigen::Matrix2cd::Identity();
  bool is_two_qubit() const { return b >= 0; }
};

// CircuitSpec plus the unitaries of every gate, layer by layer.
struct GateCircuit {
  CircuitSpec spec;
  std::vector<std::vector<GateOp>> layer_ops;
};

struct RandomCircuitConfig {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> coupling;  // allowed qubit pairs
  std::string gate_set = "haar";
  std::uint64_t seed = 0;
};

// Haar-random unitaries via QR of a complex Ginibre matrix with phase fix.
Eigen::Matrix2cd haar_unitary_2(Rng& rng);
Eigen::Matrix4cd haar_unitary_4(Rng& rng);

// m cycles of [1-gate layer on all qubits, 2-gate layer on a random maximal
// matching of the coupling graph], plus a trailing 1-gate layer when m >= 1.
// Deterministic given the seed.
GateCircuit generate_random_circuit(const RandomCircuitConfig& config);

// Exact simulation from the given computational basis state. Gates are
// checked unitary to 1e-10 and the state norm is asserted after every layer.
StateVector simulate_ideal(const GateCircuit& circuit, std::uint64_t basis_index = 0);

//=============================================================================
// Noisy sampling (classical channels on bitstrings)
//=============================================================================

// Mixture-weight and classical noise configuration for a sampling run.
struct NoiseConfig {
  double global_fidelity = 1.0;            // phi
  std::vector<ReadoutErrorPair> readout;   // indexed by qubit, may be empty
  double damping_gamma = 0.0;              // per-cycle 1 -> 0 flip probability
};

// Each bitstring drawn from phi * p_ideal + (1-phi) * uniform, with the ideal
// probability of the drawn string attached.
SampleSet sample_with_fidelity(const StateVector& state, double phi,
                               std::size_t count, std::uint64_t seed);

// Independent asymmetric bit flips: 0 -> 1 with q01, 1 -> 0 with q10.
SampleSet apply_readout_channel(const SampleSet& samples,
                                std::span<const ReadoutErrorPair> readout,
                                std::uint64_t seed);
SampleSet apply_readout_channel(const SampleSet& samples,
                                const ReadoutErrorPair& uniform_pair,
                                std::uint64_t seed);

// Classical amplitude-damping surrogate: every 1 survives m cycles with
// probability (1-gamma)^m, otherwise becomes 0.
SampleSet apply_damping(const SampleSet& samples, double gamma, int m,
                        std::uint64_t seed);

}  // namespace rcsaudit
