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

#include "rcsaudit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rcsaudit {

//=============================================================================
// RNG
//=============================================================================

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t task) {
  std::uint64_t s = base_seed;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= task; ++i) out = splitmix64(s);
  return out;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection sampling keeps the distribution exactly uniform
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

//=============================================================================
// StateVector
//=============================================================================

StateVector::StateVector(int n, std::uint64_t basis_index) : n_(n) {
  if (n < 1 || n > kMaxStateQubits)
    throw DomainError("state-vector qubit count out of range: " + std::to_string(n));
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (basis_index >= static_cast<std::uint64_t>(dim))
    throw DomainError("basis index out of range");
  amplitudes = Eigen::VectorXcd::Zero(dim);
  amplitudes(static_cast<Eigen::Index>(basis_index)) = 1.0;
}

void StateVector::apply_one_gate(const Eigen::Matrix2cd& u, int qubit) {
  const std::uint64_t stride = 1ull << qubit;
  const std::uint64_t dim = this->dim();
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(base);
    const auto i1 = static_cast<Eigen::Index>(base | stride);
    const std::complex<double> a0 = amplitudes(i0), a1 = amplitudes(i1);
    amplitudes(i0) = u(0, 0) * a0 + u(0, 1) * a1;
    amplitudes(i1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply_two_gate(const Eigen::Matrix4cd& u, int a, int b) {
  if (a == b) throw DomainError("2-gate targets must differ");
  const std::uint64_t sa = 1ull << a, sb = 1ull << b;
  const std::uint64_t dim = this->dim();
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (sa | sb)) continue;
    Eigen::Index idx[4];
    idx[0] = static_cast<Eigen::Index>(base);
    idx[1] = static_cast<Eigen::Index>(base | sa);
    idx[2] = static_cast<Eigen::Index>(base | sb);
    idx[3] = static_cast<Eigen::Index>(base | sa | sb);
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = amplitudes(idx[k]);
    const Eigen::Vector4cd w = u * v;
    for (int k = 0; k < 4; ++k) amplitudes(idx[k]) = w(k);
  }
}

//=============================================================================
// Random circuits
//=============================================================================

namespace {

template <typename Matrix>
Matrix haar_from_ginibre(Rng& rng) {
  Matrix z;
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j)
      z(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is exactly Haar
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    const std::complex<double> d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

template <typename Matrix>
void check_unitary(const Matrix& u, const char* what) {
  const Matrix delta = u.adjoint() * u - Matrix::Identity();
  if (delta.cwiseAbs().maxCoeff() > 1e-10)
    throw NonUnitaryGateError(std::string(what) + " fails the unitarity check");
}

}  // namespace

Eigen::Matrix2cd haar_unitary_2(Rng& rng) {
  return haar_from_ginibre<Eigen::Matrix2cd>(rng);
}

Eigen::Matrix4cd haar_unitary_4(Rng& rng) {
  return haar_from_ginibre<Eigen::Matrix4cd>(rng);
}

GateCircuit generate_random_circuit(const RandomCircuitConfig& config) {
  if (config.n < 1) throw DomainError("circuit needs at least one qubit");
  for (const auto& [a, b] : config.coupling)
    if (a == b || a < 0 || b < 0 || a >= config.n || b >= config.n)
      throw DomainError("invalid coupling pair " + std::to_string(a) + "," +
                        std::to_string(b));
  if (config.m > 0 && config.coupling.empty())
    throw DomainError("empty coupling graph but m > 0 requires 2-gate layers");
  if (config.gate_set != "haar")
    throw DomainError("unknown gate set: " + config.gate_set);

  GateCircuit circuit;
  circuit.spec.depth = config.m;
  for (int q = 0; q < config.n; ++q)
    circuit.spec.qubits.push_back("q" + std::to_string(q));

  Rng rng(config.seed);
  const auto one_gate_layer = [&] {
    GateLayer layer;
    std::vector<GateOp> ops;
    for (int q = 0; q < config.n; ++q) {
      layer.one_gates.push_back(circuit.spec.qubits[q]);
      GateOp op;
      op.a = q;
      op.u2 = haar_unitary_2(rng);
      ops.push_back(op);
    }
    circuit.spec.layers.push_back(std::move(layer));
    circuit.layer_ops.push_back(std::move(ops));
  };

  for (int cycle = 0; cycle < config.m; ++cycle) {
    one_gate_layer();
    // random maximal matching: greedy over a shuffled edge list
    std::vector<std::size_t> edge_order(config.coupling.size());
    std::iota(edge_order.begin(), edge_order.end(), 0);
    for (std::size_t i = edge_order.size(); i > 1; --i)
      std::swap(edge_order[i - 1], edge_order[rng.below(i)]);
    std::vector<bool> used(config.n, false);
    GateLayer layer;
    std::vector<GateOp> ops;
    for (std::size_t ei : edge_order) {
      const auto [a, b] = config.coupling[ei];
      if (used[a] || used[b]) continue;
      used[a] = used[b] = true;
      layer.two_gates.push_back(
          make_qubit_pair(circuit.spec.qubits[a], circuit.spec.qubits[b]));
      GateOp op;
      op.a = a;
      op.b = b;
      op.u4 = haar_unitary_4(rng);
      ops.push_back(op);
    }
    circuit.spec.layers.push_back(std::move(layer));
    circuit.layer_ops.push_back(std::move(ops));
  }
  if (config.m >= 1) one_gate_layer();
  circuit.spec.validate();
  return circuit;
}

StateVector simulate_ideal(const GateCircuit& circuit, std::uint64_t basis_index) {
  const int n = static_cast<int>(circuit.spec.n());
  StateVector state(n, basis_index);
  for (const auto& ops : circuit.layer_ops) {
    for (const auto& op : ops) {
      if (op.is_two_qubit()) {
        check_unitary(op.u4, "2-gate");
        state.apply_two_gate(op.u4, op.a, op.b);
      } else {
        check_unitary(op.u2, "1-gate");
        state.apply_one_gate(op.u2, op.a);
      }
    }
    const double norm = state.norm_squared();
    if (std::fabs(norm - 1.0) > 1e-10)
      throw Error("state norm drifted to " + std::to_string(norm));
  }
  return state;
}

//=============================================================================
// Noisy sampling
//=============================================================================

SampleSet sample_with_fidelity(const StateVector& state, double phi,
                               std::size_t count, std::uint64_t seed) {
  check_probability(phi, "global fidelity");
  const int n = state.n();
  const std::uint64_t dim = state.dim();

  // cumulative ideal distribution for inverse-CDF draws
  std::vector<double> cumulative(dim);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    acc += state.probability(i);
    cumulative[i] = acc;
  }

  Rng rng(seed);
  SampleSet samples(n);
  std::vector<double> probs;
  probs.reserve(count);
  std::vector<std::uint8_t> row(n);
  for (std::size_t s = 0; s < count; ++s) {
    std::uint64_t index;
    if (rng.uniform() < phi) {
      const double u = rng.uniform() * acc;
      index = static_cast<std::uint64_t>(
          std::upper_bound(cumulative.begin(), cumulative.end(), u) -
          cumulative.begin());
      if (index >= dim) index = dim - 1;
    } else {
      index = rng.below(dim);
    }
    for (int q = 0; q < n; ++q) row[q] = (index >> q) & 1;
    samples.append(row);
    probs.push_back(state.probability(index));
  }
  samples.set_ideal_probs(std::move(probs));
  return samples;
}

SampleSet apply_readout_channel(const SampleSet& samples,
                                std::span<const ReadoutErrorPair> readout,
                                std::uint64_t seed) {
  if (static_cast<int>(readout.size()) != samples.n())
    throw DomainError("readout pairs must cover all " +
                      std::to_string(samples.n()) + " qubits");
  for (const auto& p : readout) {
    check_probability(p.q01, "q01");
    check_probability(p.q10, "q10");
  }
  Rng rng(seed);
  SampleSet out = samples;
  const std::size_t count = out.size();
  for (std::size_t s = 0; s < count; ++s) {
    for (int q = 0; q < out.n(); ++q) {
      const double flip = out.bit(s, q) ? readout[q].q10 : readout[q].q01;
      if (rng.uniform() < flip) out.set_bit(s, q, 1 - out.bit(s, q));
    }
  }
  return out;
}

SampleSet apply_readout_channel(const SampleSet& samples,
                                const ReadoutErrorPair& uniform_pair,
                                std::uint64_t seed) {
  std::vector<ReadoutErrorPair> readout(samples.n(), uniform_pair);
  return apply_readout_channel(samples, readout, seed);
}

SampleSet apply_damping(const SampleSet& samples, double gamma, int m,
                        std::uint64_t seed) {
  check_probability(gamma, "damping gamma");
  if (m < 0) throw DomainError("negative cycle count");
  const double survive = std::pow(1.0 - gamma, m);
  Rng rng(seed);
  SampleSet out = samples;
  const std::size_t count = out.size();
  for (std::size_t s = 0; s < count; ++s)
    for (int q = 0; q < out.n(); ++q)
      if (out.bit(s, q) && rng.uniform() >= survive) out.set_bit(s, q, 0);
  return out;
}

}  // namespace rcsaudit
