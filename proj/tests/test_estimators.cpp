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

#include <algorithm>
#include <cmath>

#include "rcsaudit/estimators.hpp"
#include "rcsaudit/simulator.hpp"
#include "rcsaudit/stats.hpp"

using namespace rcsaudit;

namespace {

SampleSet with_probs(int n, std::vector<double> probs) {
  SampleSet s(n);
  std::vector<std::uint8_t> row(n, 0);
  for (std::size_t i = 0; i < probs.size(); ++i) s.append(row);
  s.set_ideal_probs(std::move(probs));
  return s;
}

SampleSet from_strings(const std::vector<std::string>& strings) {
  SampleSet s;
  for (const auto& bits : strings) s.append_bitstring(bits);
  return s;
}

}  // namespace

TEST_CASE("xeb_linear") {
  SUBCASE("uniform probabilities give 0") {
    const SampleSet s = with_probs(4, std::vector<double>(20, 1.0 / 16));
    CHECK(xeb_linear(s).value == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("n=1 with probs {1, 0}") {
    CHECK(xeb_linear(with_probs(1, {1.0, 0.0})).value == doctest::Approx(0.0));
  }
  SUBCASE("missing amplitudes") {
    SampleSet s = from_strings({"01", "10"});
    CHECK_THROWS_AS(xeb_linear(s), MissingAmplitudesError);
  }
  SUBCASE("permutation invariant and linear in mean(p)") {
    std::vector<double> probs = {0.001, 0.003, 0.0007, 0.002, 0.0004};
    const double v1 = xeb_linear(with_probs(8, probs)).value;
    std::reverse(probs.begin(), probs.end());
    CHECK(xeb_linear(with_probs(8, probs)).value == doctest::Approx(v1).epsilon(1e-12));
    for (auto& p : probs) p *= 2.0;
    const double v2 = xeb_linear(with_probs(8, probs)).value;
    CHECK(v2 + 1.0 == doctest::Approx(2.0 * (v1 + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("mle_fidelity") {
  SUBCASE("flat likelihood (uniform probs) reports 0, flagged") {
    const FidelityEstimate est =
        mle_fidelity(with_probs(4, std::vector<double>(10, 1.0 / 16)));
    CHECK(est.value == 0.0);
    CHECK_FALSE(est.feasible);
  }
  SUBCASE("single sample with 2^n p = 2: boundary maximizer at 1") {
    // log(1 + phi) increases on [0,1]; no score root, so the boundary value
    // is reported flagged
    const FidelityEstimate est = mle_fidelity(with_probs(1, {1.0}));
    CHECK(est.value == 1.0);
    CHECK_FALSE(est.feasible);
  }
  SUBCASE("closed-form interior root at 0.5") {
    // d = {+1, -1/2}: score(phi) = 1/(1+phi) - 0.5/(1-phi/2) = 0 at phi = 0.5
    const FidelityEstimate est = mle_fidelity(with_probs(1, {1.0, 0.25}));
    CHECK(est.feasible);
    CHECK(est.value == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("all probabilities below uniform push the estimate to 0, flagged") {
    const FidelityEstimate est = mle_fidelity(with_probs(2, {0.1, 0.2, 0.15}));
    CHECK(est.value == 0.0);
    CHECK_FALSE(est.feasible);
  }
  SUBCASE("a zero-probability sample keeps the root interior") {
    const FidelityEstimate est = mle_fidelity(with_probs(1, {1.0, 1.0, 0.0}));
    CHECK(est.feasible);
    CHECK(est.value > 0.0);
    CHECK(est.value < 1.0);
    // maximize 2 log(1+phi) + log(1-phi): root of 2/(1+phi) = 1/(1-phi)
    CHECK(est.value == doctest::Approx(1.0 / 3).epsilon(1e-9));
  }
}

TEST_CASE("estimators recover an injected fidelity (smoke scale)") {
  RandomCircuitConfig config;
  config.n = 6;
  config.m = 8;
  config.seed = 99;
  for (int a = 0; a < config.n; ++a)
    for (int b = a + 1; b < config.n; ++b) config.coupling.push_back({a, b});
  const StateVector state = simulate_ideal(generate_random_circuit(config));
  const SampleSet samples = sample_with_fidelity(state, 0.5, 20000, 7);
  const FidelityEstimate xeb = xeb_linear(samples);
  const FidelityEstimate mle = mle_fidelity(samples);
  // linear XEB estimates phi * (2^n sum p^2 - 1); at this size the circuit-
  // specific factor is far from 1, so the oracle supplies it exactly
  const double ceiling =
      std::ldexp(1.0, state.n()) * state.probabilities().squaredNorm() - 1.0;
  CHECK(std::fabs(xeb.value - 0.5 * ceiling) <= 5 * xeb.std_error);
  // the mixture model behind the MLE is exact, so it recovers phi itself
  CHECK(mle.feasible);
  CHECK(std::fabs(mle.value - 0.5) <= 5 * mle.std_error);
}

TEST_CASE("XEB expectation approaches 1 for deep circuits as samples grow") {
  // Porter-Thomas behavior: per-circuit expectations concentrate around
  // 2^n sum p^2 - 1, whose mean over circuits approaches 1 with n
  const int n = 12;
  double mean_xeb = 0.0;
  const int circuits = 8;
  for (int t = 0; t < circuits; ++t) {
    RandomCircuitConfig config;
    config.n = n;
    config.m = 18;
    config.seed = 1000 + t;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) config.coupling.push_back({a, b});
    const StateVector state = simulate_ideal(generate_random_circuit(config));
    const SampleSet samples =
        sample_with_fidelity(state, 1.0, 100000, derive_stream_seed(55, t));
    const FidelityEstimate xeb = xeb_linear(samples);
    const double ceiling =
        std::ldexp(1.0, n) * state.probabilities().squaredNorm() - 1.0;
    CHECK(std::fabs(xeb.value - ceiling) <= 4 * xeb.std_error);
    mean_xeb += xeb.value / circuits;
  }
  CHECK(std::fabs(mean_xeb - 1.0) <= 0.05);
}

TEST_CASE("mean_fidelity modes") {
  const auto make = [](double v) {
    FidelityEstimate e;
    e.value = v;
    return e;
  };
  const FidelityEstimate both[] = {make(0.5), make(0.5)};
  CHECK(mean_fidelity(both, MeanMode::all) == 0.5);
  CHECK(mean_fidelity(both, MeanMode::winsorized) == 0.5);
  CHECK(mean_fidelity(both, MeanMode::restricted) == 0.5);

  const FidelityEstimate outside[] = {make(1.2), make(-0.2)};
  CHECK(mean_fidelity(outside, MeanMode::winsorized) == doctest::Approx(0.5));
  CHECK(mean_fidelity(outside, MeanMode::all) == doctest::Approx(0.5));

  const FidelityEstimate mixed[] = {make(1.2), make(0.4), make(-0.2)};
  CHECK(mean_fidelity(mixed, MeanMode::restricted) == doctest::Approx(0.4));

  CHECK_THROWS_AS(mean_fidelity(outside, MeanMode::restricted), EmptySelectionError);

  SUBCASE("winsorized mean always lands in [0,1]") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<FidelityEstimate> es;
      for (int i = 0; i < 10; ++i) es.push_back(make(4.0 * rng.uniform() - 2.0));
      const double w = mean_fidelity(es, MeanMode::winsorized);
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
    }
  }
  SUBCASE("infeasible MLE boundary values are excluded from restricted") {
    FidelityEstimate flagged = make(1.0);
    flagged.estimator_tag = EstimatorTag::mle;
    flagged.feasible = false;
    const FidelityEstimate es[] = {flagged, make(0.4)};
    CHECK(mean_fidelity(es, MeanMode::restricted) == doctest::Approx(0.4));
  }
}

TEST_CASE("ones_statistics") {
  SUBCASE("balanced pair") {
    const OnesStatistics s = ones_statistics(from_strings({"00", "11"}));
    CHECK(s.overall == doctest::Approx(0.5));
    CHECK(s.zeros_minus_ones_pct == doctest::Approx(0.0));
  }
  SUBCASE("quarter ones") {
    const OnesStatistics s = ones_statistics(from_strings({"00", "01"}));
    CHECK(s.overall == doctest::Approx(0.25));
    CHECK(s.zeros_minus_ones_pct == doctest::Approx(50.0));
  }
  SUBCASE("per-qubit keys use the sample set's qubit names when present") {
    SampleSet s = from_strings({"01", "01"});
    s.qubit_ids = {"q3_5", "q3_6"};
    const OnesStatistics stats = ones_statistics(s);
    CHECK(stats.per_qubit.at("q3_5") == doctest::Approx(0.0));
    CHECK(stats.per_qubit.at("q3_6") == doctest::Approx(1.0));
  }
  SUBCASE("overall equals the mean of per-qubit proportions") {
    Rng rng(41);
    SampleSet s(5);
    std::vector<std::uint8_t> row(5);
    for (int i = 0; i < 200; ++i) {
      for (auto& b : row) b = rng.below(2);
      s.append(row);
    }
    const OnesStatistics stats = ones_statistics(s);
    double m = 0.0;
    for (double p : stats.per_qubit_by_index) m += p;
    m /= stats.per_qubit_by_index.size();
    CHECK(stats.overall == doctest::Approx(m).epsilon(1e-12));
    CHECK(stats.zeros_minus_ones_pct ==
          doctest::Approx(100.0 * (1 - 2 * stats.overall)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ones_statistics(SampleSet(3)), DomainError);
}

TEST_CASE("predicted_ones_at_zero_depth") {
  CHECK(predicted_ones_at_zero_depth({0.3, 0.3}) == doctest::Approx(0.5));
  CHECK(predicted_ones_at_zero_depth({0.0225, 0.0547}) == doctest::Approx(0.4839));
  CHECK(predicted_ones_at_zero_depth({1.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("depth_regression") {
  SUBCASE("constant proportions give slope 0, p-value 1") {
    const std::pair<double, double> pts[] = {{4, 0.5}, {8, 0.5}, {12, 0.5}, {16, 0.5}};
    const RegressionResult r = depth_regression(pts);
    CHECK(r.slope == doctest::Approx(0.0).scale(1));
    CHECK(r.p_value == doctest::Approx(1.0));
  }
  SUBCASE("exact line is recovered with zero stderr") {
    std::vector<std::pair<double, double>> pts;
    for (int m = 4; m <= 32; m += 4) pts.push_back({m, 5.4e-5 * m + 0.5});
    const RegressionResult r = depth_regression(pts);
    CHECK(r.slope == doctest::Approx(5.4e-5).epsilon(1e-9));
    CHECK(r.intercept == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.slope_stderr == doctest::Approx(0.0).scale(1e-10));
    CHECK(r.p_value <= 1e-9);
  }
  SUBCASE("degenerate design") {
    const std::pair<double, double> pts[] = {{4, 0.5}, {4, 0.6}, {4, 0.4}};
    CHECK_THROWS_AS(depth_regression(pts), DegenerateDesignError);
    const std::pair<double, double> two[] = {{4, 0.5}, {8, 0.6}};
    CHECK_THROWS_AS(depth_regression(two), DomainError);
  }
  SUBCASE("95% confidence interval covers a true slope in >= 90% of trials") {
    // noisy synthetic data, true slope 5.4e-5, sigma 1e-3, 100 points
    const double slope = 5.4e-5, sigma = 1e-3;
    int covered = 0;
    const int trials = 1000;
    Rng rng(2024);
    std::vector<std::pair<double, double>> pts(100);
    for (int t = 0; t < trials; ++t) {
      for (int i = 0; i < 100; ++i) {
        const double m = 4 + (i % 25) * 4;
        pts[i] = {m, 0.5 + slope * m + sigma * rng.normal()};
      }
      const RegressionResult r = depth_regression(pts);
      // t quantile for 98 dof at 95% two-sided is ~1.9845
      if (std::fabs(r.slope - slope) <= 1.9845 * r.slope_stderr) ++covered;
    }
    CHECK(covered >= 900);
  }
}
