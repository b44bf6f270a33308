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

namespace rcsaudit {

double mean(std::span<const double> xs);
// unbiased (n-1) sample variance
double sample_variance(std::span<const double> xs);

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation (Lentz).
double regularized_incomplete_beta(double a, double b, double x);

// Regularized upper incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

// Two-sided p-value of a t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

// Upper tail probability of a chi-squared variable with df degrees of freedom.
double chi_squared_sf(double x, double df);

}  // namespace rcsaudit
