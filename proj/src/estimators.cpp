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

#include "rcsaudit/estimators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "rcsaudit/stats.hpp"

namespace rcsaudit {

//=============================================================================
// SampleSet
//=============================================================================

void SampleSet::append(std::span<const std::uint8_t> bits) {
  if (n_ == 0) n_ = static_cast<int>(bits.size());
  if (static_cast<int>(bits.size()) != n_)
    throw ParseError("bitstring length " + std::to_string(bits.size()) +
                     " does not match n=" + std::to_string(n_));
  bits_.insert(bits_.end(), bits.begin(), bits.end());
}

void SampleSet::append_bitstring(const std::string& bits, long source_line) {
  std::vector<std::uint8_t> row;
  row.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw ParseError(std::string("non-binary character '") + c + "'",
                       source_line);
    row.push_back(c == '1');
  }
  if (n_ != 0 && static_cast<int>(row.size()) != n_)
    throw ParseError("bitstring length " + std::to_string(row.size()) +
                         " does not match n=" + std::to_string(n_),
                     source_line);
  append(row);
}

std::string SampleSet::bitstring(std::size_t sample) const {
  std::string s(n_, '0');
  for (int q = 0; q < n_; ++q)
    if (bit(sample, q)) s[q] = '1';
  return s;
}

const std::vector<double>& SampleSet::ideal_probs() const {
  if (!ideal_probs_)
    throw MissingAmplitudesError("sample set has no ideal probabilities");
  return *ideal_probs_;
}

void SampleSet::set_ideal_probs(std::vector<double> probs) {
  if (probs.size() != size())
    throw DomainError("ideal_probs size " + std::to_string(probs.size()) +
                      " != sample count " + std::to_string(size()));
  for (double p : probs)
    if (p < 0) throw DomainError("negative ideal probability");
  ideal_probs_ = std::move(probs);
}

//=============================================================================
// XEB / MLE
//=============================================================================

namespace {

// 2^n p(x_i) - 1 for every sample
std::vector<double> scaled_deviations(const SampleSet& samples) {
  const auto& probs = samples.ideal_probs();
  if (probs.empty()) throw MissingAmplitudesError("empty ideal probabilities");
  const double scale = std::ldexp(1.0, samples.n());
  std::vector<double> d(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) d[i] = scale * probs[i] - 1.0;
  return d;
}

}  // namespace

FidelityEstimate xeb_linear(const SampleSet& samples) {
  const auto d = scaled_deviations(samples);
  FidelityEstimate est;
  est.estimator_tag = EstimatorTag::xeb;
  est.sample_count = d.size();
  est.value = mean(d);
  est.std_error =
      d.size() > 1 ? std::sqrt(sample_variance(d) / static_cast<double>(d.size()))
                   : 0.0;
  return est;
}

FidelityEstimate mle_fidelity(const SampleSet& samples) {
  const auto d = scaled_deviations(samples);
  FidelityEstimate est;
  est.estimator_tag = EstimatorTag::mle;
  est.sample_count = d.size();

  const auto score = [&d](double phi) {
    double s = 0.0;
    for (double di : d) s += di / (1.0 + phi * di);
    return s;
  };
  // observed Fisher information at phi
  const auto info = [&d](double phi) {
    double s = 0.0;
    for (double di : d) {
      const double t = 1.0 + phi * di;
      s += di * di / (t * t);
    }
    return s;
  };

  const bool flat = std::all_of(d.begin(), d.end(), [](double x) { return x == 0.0; });
  if (flat) {
    // uniform-probability degenerate case: likelihood constant in phi
    est.value = 0.0;
    est.feasible = false;
    est.std_error = 0.0;
    return est;
  }

  double lo = 0.0, hi = 1.0;
  double slo = score(lo);
  if (slo <= 0.0) {
    // likelihood non-increasing on [0,1]: maximizer at the left boundary
    est.value = 0.0;
    est.feasible = (slo == 0.0);
    est.std_error = 1.0 / std::sqrt(info(0.0));
    return est;
  }
  // a sample with p(x) = 0 drives the score to -inf as phi -> 1
  const bool has_zero_prob =
      std::any_of(d.begin(), d.end(), [](double x) { return x <= -1.0; });
  double shi = has_zero_prob ? -1.0 : score(hi);
  if (!has_zero_prob && shi >= 0.0) {
    // likelihood still increasing at the right boundary
    est.value = 1.0;
    est.feasible = (shi == 0.0);
    est.std_error = 1.0 / std::sqrt(info(1.0));
    return est;
  }

  // bisection on the strictly decreasing score; |hi-lo| halves each step
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    if (!(slo >= 0.0 && shi <= 0.0))
      throw Error("MLE score lost monotonicity during bisection");
    const double mid = 0.5 * (lo + hi);
    const double smid = score(mid);
    if (smid > 0.0) {
      lo = mid;
      slo = smid;
    } else {
      hi = mid;
      shi = smid;
    }
  }
  est.value = 0.5 * (lo + hi);
  est.feasible = true;
  est.std_error = 1.0 / std::sqrt(info(est.value));
  return est;
}

double mean_fidelity(std::span<const FidelityEstimate> estimates, MeanMode mode) {
  if (estimates.empty()) throw DomainError("mean over empty estimate list");
  std::vector<double> vals;
  vals.reserve(estimates.size());
  for (const auto& e : estimates) {
    switch (mode) {
      case MeanMode::all:
        vals.push_back(e.value);
        break;
      case MeanMode::winsorized:
        vals.push_back(std::clamp(e.value, 0.0, 1.0));
        break;
      case MeanMode::restricted:
        if (e.value >= 0.0 && e.value <= 1.0 &&
            (e.estimator_tag != EstimatorTag::mle || e.feasible))
          vals.push_back(e.value);
        break;
    }
  }
  if (vals.empty())
    throw EmptySelectionError("restricted mean: no estimates inside [0,1]");
  return mean(vals);
}

//=============================================================================
// Bitstring statistics
//=============================================================================

OnesStatistics ones_statistics(const SampleSet& samples) {
  if (samples.empty()) throw DomainError("ones_statistics of empty sample set");
  const std::size_t count = samples.size();
  const int n = samples.n();
  OnesStatistics stats;
  stats.per_qubit_by_index.assign(n, 0.0);
  for (std::size_t s = 0; s < count; ++s)
    for (int q = 0; q < n; ++q) stats.per_qubit_by_index[q] += samples.bit(s, q);
  const bool named = static_cast<int>(samples.qubit_ids.size()) == n;
  double total = 0.0;
  for (int q = 0; q < n; ++q) {
    stats.per_qubit_by_index[q] /= static_cast<double>(count);
    total += stats.per_qubit_by_index[q];
    const QubitId key = named ? samples.qubit_ids[q] : "q" + std::to_string(q);
    stats.per_qubit[key] = stats.per_qubit_by_index[q];
  }
  stats.overall = total / n;
  stats.zeros_minus_ones_pct = 100.0 * (1.0 - 2.0 * stats.overall);
  return stats;
}

double predicted_ones_at_zero_depth(const ReadoutErrorPair& pair) {
  check_probability(pair.q01, "q01");
  check_probability(pair.q10, "q10");
  return 0.5 + 0.5 * (pair.q01 - pair.q10);
}

RegressionResult depth_regression(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw DomainError("regression needs at least 3 points");
  const auto nd = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(nd, 2);
  Eigen::VectorXd y(nd);
  for (Eigen::Index i = 0; i < nd; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = points[i].first;
    y(i) = points[i].second;
  }
  const double mx = design.col(1).mean();
  const double sxx = (design.col(1).array() - mx).square().sum();
  if (sxx == 0.0)
    throw DegenerateDesignError("all depths equal; slope is undefined");

  const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd resid = y - design * beta;
  const double dof = static_cast<double>(nd - 2);
  const double sigma2 = resid.squaredNorm() / dof;

  RegressionResult res;
  res.intercept = beta(0);
  res.slope = beta(1);
  res.slope_stderr = std::sqrt(sigma2 / sxx);
  if (res.slope_stderr == 0.0) {
    // exact fit: p-value collapses to 0 unless the slope is 0 too
    res.p_value = res.slope == 0.0 ? 1.0 : 0.0;
  } else {
    res.p_value = student_t_two_sided_p(res.slope / res.slope_stderr, dof);
  }
  return res;
}

}  // namespace rcsaudit
