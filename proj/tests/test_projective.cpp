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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ontolab/errors.hpp"
#include "ontolab/measurement.hpp"
#include "ontolab/projective.hpp"
#include "oracles.hpp"

using namespace ontolab;
using std::numbers::pi;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

}  // namespace

TEST_CASE("pure states are normalized and phase-canonical") {
  const PureState a = make_pure_state({1.0, 0.0});
  CHECK(std::abs(a[0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(a[1]) < 1e-15);

  const PureState b = make_pure_state({0.0, Complex(0, 2)});
  CHECK(std::abs(b[0]) < 1e-15);
  CHECK(std::abs(b[1] - Complex(1, 0)) < 1e-15);

  const PureState c = make_pure_state({1.0, 1.0, 0.0});
  CHECK(c[0].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(c[1].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));

  // Global phase is quotiented out.
  const PureState d = make_pure_state({Complex(0, 1), Complex(0, 1)});
  CHECK((d.amplitudes() - c.amplitudes().head(2)).norm() < 1e-14);
}

TEST_CASE("pure state construction errors") {
  CHECK_THROWS_AS(make_pure_state({0.0, 0.0}), ZeroVector);
  CHECK_THROWS_AS(make_pure_state({1.0}), InvalidDimension);
  CHECK_THROWS_AS(basis_state(3, 3), IndexOutOfRange);
}

TEST_CASE("overlap and distance") {
  const PureState e0 = basis_state(2, 0);
  const PureState e1 = basis_state(2, 1);
  const PureState s = make_pure_state({std::cos(pi / 6), std::sin(pi / 6)});
  CHECK(overlap(e0, e1) == doctest::Approx(0.0));
  CHECK(overlap(e0, e0) == doctest::Approx(1.0));
  CHECK(overlap(e0, s) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(distance(e0, e1) == doctest::Approx(1.0));
  CHECK(distance(s, s) == doctest::Approx(0.0));
  CHECK(distance(e0, s) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(overlap(e0, basis_state(3, 0)), DimensionMismatch);
}

TEST_CASE("Haar overlap marginal matches 1-(1-t)^(D-1)") {
  for (int D : {2, 3, 4}) {
    CAPTURE(D);
    RandomStream rng = make_stream(11, static_cast<std::uint64_t>(D));
    const PureState psi = haar_state(D, rng);
    std::vector<double> t;
    for (int k = 0; k < 100000; ++k) t.push_back(overlap(haar_state(D, rng), psi));
    CHECK(oracle::ks_statistic(t, [D](double x) { return oracle::haar_overlap_cdf(x, D); }) < 0.01);
  }
}

TEST_CASE("Haar overlap law is the same for two reference states") {
  RandomStream rng = make_stream(12, 0);
  const PureState a = basis_state(3, 0);
  const PureState b = make_pure_state({Complex(0.3, 0.1), 0.5, Complex(-0.2, 0.7)});
  std::vector<double> ta, tb;
  for (int k = 0; k < 100000; ++k) {
    const PureState x = haar_state(3, rng);
    (k % 2 == 0 ? ta : tb).push_back(overlap(x, k % 2 == 0 ? a : b));
  }
  CHECK(oracle::ks_two_sample(ta, tb) < 0.01);
}

TEST_CASE("the Haar overlap density integrates to the closed-form CDF") {
  for (int D : {2, 3, 4})
    for (double t : {0.1, 0.5, 0.9}) {
      const double numeric =
          oracle::integrate([D](double x) { return (D - 1) * std::pow(1 - x, D - 2); }, 0.0, t);
      CHECK(numeric == doctest::Approx(oracle::haar_overlap_cdf(t, D)).epsilon(1e-12));
    }
}

TEST_CASE("Haar unitaries are unitary to 1e-10") {
  RandomStream rng = make_stream(13, 0);
  for (int D = kMinDim; D <= kMaxDim; ++D) {
    const Unitary u = haar_unitary(D, rng);
    const ComplexMatrix err = u.matrix().adjoint() * u.matrix() - ComplexMatrix::Identity(D, D);
    CHECK(err.cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Haar contexts") {
  RandomStream rng = make_stream(14, 0);
  const Context full = haar_context(3, 3, rng);
  REQUIRE(full.system_dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(overlap(full[i], full[j]) < 1e-20);

  const Context embedded = haar_context(2, 3, rng);
  REQUIRE(embedded.system_dim() == 2);
  CHECK(embedded.ontic_dim() == 3);
  CHECK(std::abs(embedded[0][2]) == 0.0);
  CHECK(std::abs(embedded[1][2]) == 0.0);
  CHECK(overlap(embedded[0], embedded[1]) < 1e-20);

  // Completeness makes the mean overlap with element 0 equal to 1/3.
  const PureState lambda = haar_state(3, rng);
  double sum = 0.0, sum2 = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double t = overlap(lambda, haar_context(3, 3, rng)[0]);
    sum += t;
    sum2 += t * t;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::abs(mean - 1.0 / 3.0) < 3 * se);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(Context::from_elements({basis_state(2, 0), make_pure_state({1.0, 1.0})}),
                  NonOrthogonalContext);
  CHECK_THROWS_AS(Context::from_elements({basis_state(2, 0), basis_state(3, 1)}),
                  DimensionMismatch);
}

TEST_CASE("embedding") {
  const PureState e = embed(basis_state(2, 0), 3);
  CHECK(e.dim() == 3);
  CHECK(std::abs(e[0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(e[2]) == 0.0);

  RandomStream rng = make_stream(15, 0);
  for (int k = 0; k < 20; ++k) {
    const PureState a = haar_state(2, rng);
    const PureState b = haar_state(2, rng);
    CHECK(overlap(embed(a, 4), embed(b, 4)) == doctest::Approx(overlap(a, b)).epsilon(1e-12));
    CHECK((restrict_to(embed(a, 4), 2).amplitudes() - a.amplitudes()).norm() < 1e-14);
  }
  CHECK_THROWS_AS(embed(basis_state(3, 0), 2), DimensionMismatch);
}

TEST_CASE("unitary action") {
  RandomStream rng = make_stream(16, 0);
  const PureState a = haar_state(3, rng);
  const PureState b = haar_state(3, rng);
  CHECK(distance(apply_unitary(Unitary::identity(3), a), a) < 1e-14);

  const Unitary u = haar_unitary(3, rng);
  CHECK(overlap(apply_unitary(u, a), apply_unitary(u, b)) ==
        doctest::Approx(overlap(a, b)).epsilon(1e-10));

  const Unitary x = Unitary::from_matrix(pauli_x());
  CHECK(distance(apply_unitary(x, basis_state(2, 0)), basis_state(2, 1)) < 1e-15);

  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(Unitary::from_matrix(bad), NotUnitary);
}

TEST_CASE("unitaries fixing an axis") {
  RandomStream rng = make_stream(17, 0);
  const PureState axis = haar_state(3, rng);
  const Context ctx = context_containing(axis);
  for (int k = 0; k < 50; ++k) {
    const Unitary u = k % 2 ? unitary_fixing_axis(axis, rng) : unitary_fixing_axis(axis, 0.3 * k);
    CHECK(overlap(apply_unitary(u, axis), axis) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(overlap(apply_unitary(u, ctx[1]), axis) < 1e-20);

    // Rotating {λ0, λ1, λ2} yields {λ0, λ1', λ2'} with λ1', λ2' ⊥ λ0.
    const Context rotated = rotate_context(u, ctx);
    CHECK(overlap(rotated[0], axis) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(overlap(rotated[1], axis) < 1e-20);
    CHECK(overlap(rotated[2], axis) < 1e-20);
  }
}
