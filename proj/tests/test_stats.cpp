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

#include "rcsaudit/stats.hpp"

using namespace rcsaudit;

TEST_CASE("incomplete beta against closed forms") {
  CHECK(regularized_incomplete_beta(1.0, 1.0, 0.5) == doctest::Approx(0.5));
  // I_x(1, b) = 1 - (1-x)^b
  for (double x : {0.1, 0.35, 0.8})
    for (double b : {1.0, 2.5, 7.0})
      CHECK(regularized_incomplete_beta(1.0, b, x) ==
            doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(3.0, 2.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(3.0, 2.0, 1.0) == 1.0);
}

TEST_CASE("incomplete gamma against closed forms") {
  // Q(1, x) = exp(-x)
  for (double x : {0.2, 1.0, 3.7})
    CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  CHECK(regularized_gamma_q(2.5, 0.0) == 1.0);
  // chi-squared with 2 dof: sf(x) = exp(-x/2)
  CHECK(chi_squared_sf(3.0, 2.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
}

TEST_CASE("t-distribution tail probabilities") {
  CHECK(student_t_two_sided_p(0.0, 5.0) == doctest::Approx(1.0));
  // classic two-sided 5% critical value for 10 dof
  CHECK(student_t_two_sided_p(2.228, 10.0) == doctest::Approx(0.05).epsilon(2e-3));
  // and for 1 dof (Cauchy): P(|T| > 1) = 0.5
  CHECK(student_t_two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(student_t_two_sided_p(100.0, 20.0) < 1e-10);
}

TEST_CASE("moments") {
  const double xs[] = {1.0, 2.0, 3.0, 4.0};
  CHECK(mean(xs) == doctest::Approx(2.5));
  CHECK(sample_variance(xs) == doctest::Approx(5.0 / 3.0));
}
