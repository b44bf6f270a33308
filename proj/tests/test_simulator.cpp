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
#include <map>

#include "rcsaudit/estimators.hpp"
#include "rcsaudit/simulator.hpp"
#include "rcsaudit/stats.hpp"

using namespace rcsaudit;

namespace {

RandomCircuitConfig complete_config(int n, int m, std::uint64_t seed) {
  RandomCircuitConfig config;
  config.n = n;
  config.m = m;
  config.seed = seed;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) config.coupling.push_back({a, b});
  if (m == 0) config.coupling.clear();
  return config;
}

// chi-square goodness-of-fit p-value of sampled indices against expected
double chi_square_p(const std::map<std::uint64_t, std::size_t>& counts,
                    const Eigen::VectorXd& expected_probs, std::size_t total) {
  double stat = 0.0;
  int dof = -1;
  for (Eigen::Index i = 0; i < expected_probs.size(); ++i) {
    const double expect = expected_probs(i) * static_cast<double>(total);
    if (expect < 1e-9) continue;
    auto it = counts.find(static_cast<std::uint64_t>(i));
    const double got = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    stat += (got - expect) * (got - expect) / expect;
    ++dof;
  }
  return chi_squared_sf(stat, dof);
}

}  // namespace

TEST_CASE("state vector basics") {
  SUBCASE("empty circuit keeps |0...0>") {
    GateCircuit circuit;
    circuit.spec.qubits = {"q0", "q1", "q2"};
    const StateVector state = simulate_ideal(circuit);
    CHECK(state.probability(0) == doctest::Approx(1.0));
  }
  SUBCASE("bit flip lands on the index with that bit set") {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    for (int k = 0; k < 4; ++k) {
      GateCircuit circuit;
      circuit.spec.qubits = {"q0", "q1", "q2", "q3"};
      circuit.spec.layers.push_back({{circuit.spec.qubits[k]}, {}});
      GateOp op;
      op.a = k;
      op.u2 = x;
      circuit.layer_ops.push_back({op});
      const StateVector state = simulate_ideal(circuit);
      CHECK(state.probability(1ull << k) == doctest::Approx(1.0));
    }
  }
  SUBCASE("non-unitary gate is rejected") {
    GateCircuit circuit;
    circuit.spec.qubits = {"q0"};
    circuit.spec.layers.push_back({{"q0"}, {}});
    GateOp op;
    op.a = 0;
    op.u2 << 1, 0, 0, 2.0;
    circuit.layer_ops.push_back({op});
    CHECK_THROWS_AS(simulate_ideal(circuit), NonUnitaryGateError);
  }
  SUBCASE("qubit count cap") {
    CHECK_THROWS_AS(StateVector(kMaxStateQubits + 1), DomainError);
  }
}

TEST_CASE("random circuits match an independent dense-unitary oracle") {
  const GateCircuit circuit = generate_random_circuit(complete_config(5, 6, 12345));
  const StateVector state = simulate_ideal(circuit);

  // brute-force oracle: embed every gate into a full 32x32 layer matrix and
  // accumulate the product
  const Eigen::Index dim = 1 << 5;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& ops : circuit.layer_ops) {
    Eigen::MatrixXcd layer = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& op : ops) {
      Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
      for (Eigen::Index row = 0; row < dim; ++row)
        for (Eigen::Index col = 0; col < dim; ++col) {
          if (op.is_two_qubit()) {
            const std::uint64_t mask = (1ull << op.a) | (1ull << op.b);
            if ((row & ~mask) != (col & ~mask)) continue;
            const int lr = ((row >> op.a) & 1) + 2 * ((row >> op.b) & 1);
            const int lc = ((col >> op.a) & 1) + 2 * ((col >> op.b) & 1);
            full(row, col) = op.u4(lr, lc);
          } else {
            const std::uint64_t mask = 1ull << op.a;
            if ((row & ~mask) != (col & ~mask)) continue;
            full(row, col) = op.u2((row >> op.a) & 1, (col >> op.a) & 1);
          }
        }
      layer = full * layer;
    }
    total = layer * total;
  }
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(dim);
  expected(0) = 1.0;
  expected = total * expected;

  for (Eigen::Index i = 0; i < dim; ++i)
    CHECK(std::abs(expected(i) - state.amplitudes(i)) <= 1e-8);
}

TEST_CASE("norm is preserved across many layers") {
  const GateCircuit circuit = generate_random_circuit(complete_config(6, 16, 5));
  REQUIRE(circuit.layer_ops.size() >= 32);
  const StateVector state = simulate_ideal(circuit);
  CHECK(std::fabs(state.norm_squared() - 1.0) <= 1e-10);
}

TEST_CASE("generate_random_circuit structure") {
  SUBCASE("m = 0 gives an empty circuit") {
    const GateCircuit c = generate_random_circuit(complete_config(4, 0, 1));
    CHECK(c.spec.one_gate_count() == 0);
    CHECK(c.spec.two_gate_count() == 0);
  }
  SUBCASE("complete graph on 4 qubits always gets 2 disjoint pairs per layer") {
    const GateCircuit c = generate_random_circuit(complete_config(4, 6, 9));
    int two_gate_layers = 0;
    for (const auto& layer : c.spec.layers)
      if (!layer.two_gates.empty()) {
        ++two_gate_layers;
        CHECK(layer.two_gates.size() == 2);
      }
    CHECK(two_gate_layers == 6);
    CHECK(c.spec.one_gate_count() == 4 * 7);
  }
  SUBCASE("same seed, same circuit") {
    const GateCircuit a = generate_random_circuit(complete_config(5, 4, 42));
    const GateCircuit b = generate_random_circuit(complete_config(5, 4, 42));
    REQUIRE(a.spec.layers.size() == b.spec.layers.size());
    for (std::size_t i = 0; i < a.layer_ops.size(); ++i) {
      REQUIRE(a.layer_ops[i].size() == b.layer_ops[i].size());
      for (std::size_t j = 0; j < a.layer_ops[i].size(); ++j) {
        CHECK(a.layer_ops[i][j].a == b.layer_ops[i][j].a);
        CHECK(a.layer_ops[i][j].b == b.layer_ops[i][j].b);
        CHECK((a.layer_ops[i][j].u4 - b.layer_ops[i][j].u4).cwiseAbs().maxCoeff() == 0.0);
        CHECK((a.layer_ops[i][j].u2 - b.layer_ops[i][j].u2).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
  SUBCASE("empty coupling graph with cycles is an error") {
    RandomCircuitConfig config;
    config.n = 3;
    config.m = 2;
    CHECK_THROWS_AS(generate_random_circuit(config), DomainError);
  }
}

TEST_CASE("sample_with_fidelity distributions") {
  const GateCircuit circuit = generate_random_circuit(complete_config(4, 6, 77));
  const StateVector state = simulate_ideal(circuit);
  const std::size_t count = 100000;

  const auto histogram = [&](const SampleSet& samples) {
    std::map<std::uint64_t, std::size_t> counts;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      std::uint64_t index = 0;
      for (int q = 0; q < samples.n(); ++q)
        index |= static_cast<std::uint64_t>(samples.bit(s, q)) << q;
      ++counts[index];
    }
    return counts;
  };

  SUBCASE("phi = 0 is uniform") {
    const SampleSet samples = sample_with_fidelity(state, 0.0, count, 4242);
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(16, 1.0 / 16);
    CHECK(chi_square_p(histogram(samples), uniform, count) > 0.001);
  }
  SUBCASE("phi = 1 matches the ideal distribution") {
    const SampleSet samples = sample_with_fidelity(state, 1.0, count, 4243);
    CHECK(chi_square_p(histogram(samples), state.probabilities(), count) > 0.001);
  }
  SUBCASE("attached probabilities are the ideal ones") {
    const SampleSet samples = sample_with_fidelity(state, 0.7, 500, 4244);
    for (std::size_t s = 0; s < samples.size(); ++s) {
      std::uint64_t index = 0;
      for (int q = 0; q < samples.n(); ++q)
        index |= static_cast<std::uint64_t>(samples.bit(s, q)) << q;
      CHECK(samples.ideal_probs()[s] == doctest::Approx(state.probability(index)));
    }
  }
  SUBCASE("deterministic given the seed") {
    const SampleSet a = sample_with_fidelity(state, 0.5, 200, 999);
    const SampleSet b = sample_with_fidelity(state, 0.5, 200, 999);
    REQUIRE(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s)
      CHECK(a.bitstring(s) == b.bitstring(s));
  }
}

TEST_CASE("apply_readout_channel") {
  Rng rng(8);
  SampleSet balanced(10);
  std::vector<std::uint8_t> row(10);
  for (int s = 0; s < 10000; ++s) {
    for (int q = 0; q < 10; ++q) row[q] = (s + q) % 2;
    balanced.append(row);
  }

  SUBCASE("zero rates leave samples unchanged") {
    const SampleSet out = apply_readout_channel(balanced, ReadoutErrorPair{0, 0}, 3);
    for (std::size_t s = 0; s < out.size(); ++s)
      CHECK(out.bitstring(s) == balanced.bitstring(s));
  }
  SUBCASE("q10 = 1 wipes all ones") {
    const SampleSet out = apply_readout_channel(balanced, ReadoutErrorPair{0, 1}, 3);
    CHECK(ones_statistics(out).overall == 0.0);
  }
  SUBCASE("asymmetric rates shift the ones proportion to the predicted value") {
    const ReadoutErrorPair pair{0.0225, 0.0547};
    const SampleSet out = apply_readout_channel(balanced, pair, 31337);
    const double want = predicted_ones_at_zero_depth(pair);
    const double sigma = std::sqrt(want * (1 - want) / (10000.0 * 10));
    CHECK(std::fabs(ones_statistics(out).overall - want) <= 3 * sigma);
  }
  SUBCASE("symmetric rates keep uniform inputs at one half") {
    const SampleSet out = apply_readout_channel(balanced, ReadoutErrorPair{0.1, 0.1}, 5);
    CHECK(std::fabs(ones_statistics(out).overall - 0.5) <= 3 * std::sqrt(0.25 / 1e5));
  }
  SUBCASE("wrong readout vector length") {
    std::vector<ReadoutErrorPair> three(3);
    CHECK_THROWS_AS(apply_readout_channel(balanced, three, 3), DomainError);
  }
}

TEST_CASE("apply_damping") {
  SampleSet ones(6);
  std::vector<std::uint8_t> row(6, 1);
  for (int s = 0; s < 20000; ++s) ones.append(row);

  SUBCASE("gamma = 0 is the identity") {
    const SampleSet out = apply_damping(ones, 0.0, 10, 2);
    CHECK(ones_statistics(out).overall == 1.0);
  }
  SUBCASE("gamma = 1 zeroes everything") {
    const SampleSet out = apply_damping(ones, 1.0, 1, 2);
    CHECK(ones_statistics(out).overall == 0.0);
  }
  SUBCASE("survival matches (1-gamma)^m") {
    const double gamma = 0.01;
    const int m = 16;
    const SampleSet out = apply_damping(ones, gamma, m, 7);
    const double want = std::pow(1 - gamma, m);
    const double sigma = std::sqrt(want * (1 - want) / (20000.0 * 6));
    CHECK(std::fabs(ones_statistics(out).overall - want) <= 4 * sigma);
  }
}

TEST_CASE("rng stream derivation is stable") {
  CHECK(derive_stream_seed(1, 0) == derive_stream_seed(1, 0));
  CHECK(derive_stream_seed(1, 0) != derive_stream_seed(1, 1));
  CHECK(derive_stream_seed(1, 5) != derive_stream_seed(2, 5));
}
