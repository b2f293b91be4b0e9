// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOLAB_TESTS_ORACLES_HPP
#define ONTOLAB_TESTS_ORACLES_HPP

// Reference computations that share no code with the library: statistics,
// quadrature of hand-written densities, closed forms.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// sup |F_n(x) - cdf(x)|.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// sup |F_a(x) - F_b(x)|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// p-value of the chi-square homogeneity test on a 2 x k table of counts.
/// Columns with a zero total are dropped; returns 1 when fewer than two
/// columns remain.
double chi_square_homogeneity_p(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b);

/// CDF of the overlap between a Haar-random state in C^D and a fixed state.
double haar_overlap_cdf(double t, int D);

/// Adaptive Gauss-Kronrod on [a, b] with optional interior break points.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::vector<double> breaks = {});

/// 1 / ∫ (t - delta)_+ (D-1)(1-t)^{D-2} dt over [0, 1].
double linear_normalization(int D, double delta);
/// 1 / ∫ 1[t ≥ delta] (D-1)(1-t)^{D-2} dt over [0, 1].
double uniform_normalization(int D, double delta);
/// 1 / ∫ 1[t ≥ 1/√2] (2t² - 1) / 2 dt over [-1, 1].
double marble_normalization();

/// Fraction of the circle {x : x·a = cos β} on S² lying in {x : x·e_z > 0},
/// where a is at polar angle γ.
double cap_circle_fraction(double beta, double gamma);

/// Outcome-0 probability of the exact qubit model for cos θ|0> + sin θ|1>,
/// by 1-D quadrature over the overlap t.
double qubit_outcome0(double theta);

/// Green probability of the marble world with the literal hemisphere rule,
/// peak n and measurement axis m at angle alpha, by 1-D quadrature.
double marble_green(double alpha);

}  // namespace oracle

#endif  // ONTOLAB_TESTS_ORACLES_HPP
