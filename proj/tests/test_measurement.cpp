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

#include "doctest.h"
#include "ontolab/errors.hpp"
#include "ontolab/measurement.hpp"

using namespace ontolab;

TEST_CASE("outcome_of picks the largest overlap") {
  const Context c = Context::computational(3, 3);
  CHECK(outcome_of(c[1], c) == 1);
  CHECK(outcome_of(make_pure_state({0.1, 0.2, 0.9}), c) == 2);

  // Embedded model: λ orthogonal to the whole subspace ties at 0.
  const Context embedded = Context::computational(2, 3);
  CHECK(outcome_of(basis_state(3, 2), embedded) == 0);
  CHECK_THROWS_AS(outcome_of(basis_state(2, 0), c), DimensionMismatch);
}

TEST_CASE("qubit outcome is the Heaviside form") {
  RandomStream rng = make_stream(41, 0);
  const Context c = Context::computational(2, 2);
  for (int k = 0; k < 10000; ++k) {
    const PureState lambda = haar_state(2, rng);
    CHECK((outcome_of(lambda, c) == 0) == (overlap(lambda, c[0]) >= 0.5));
  }
}

TEST_CASE("characteristic functions partition the ontic space") {
  RandomStream rng = make_stream(42, 0);
  const Context c = haar_context(3, 3, rng);
  CHECK(characteristic(c[0], c, 0) == 1);
  CHECK(characteristic(c[0], c, 2) == 0);
  for (int k = 0; k < 1000; ++k) {
    const PureState lambda = haar_state(3, rng);
    int total = 0;
    for (int i = 0; i < 3; ++i) total += characteristic(lambda, c, i);
    CHECK(total == 1);
  }
  CHECK_THROWS_AS(characteristic(c[0], c, 3), IndexOutOfRange);
}

TEST_CASE("collapse recenters on the outcome element") {
  const Context c = Context::computational(2, 2);
  const EpistemicState s = collapse_update(ModelSpec::ks_qubit(), c, 0);
  CHECK(distance(s.center(), basis_state(2, 0)) < 1e-15);
}

TEST_CASE("bayes posterior samples stay in the outcome region") {
  RandomStream rng = make_stream(43, 0);
  const ModelSpec m = ModelSpec::linear_trace(3, 1 / std::sqrt(3.0));
  const EpistemicState prior =
      prepare(m, make_pure_state({std::cos(0.7), std::sin(0.7), 0.0}));
  const Context c = Context::computational(3, 3);
  const Posterior post = bayes_update(prior, c, 1, rng);
  for (int k = 0; k < 2000; ++k) CHECK(outcome_of(post.sample(rng), c) == 1);

  // Prior centered on λ0 with Δ ≥ 1/2 lies wholly in the outcome-0 region.
  const EpistemicState at0 = prepare(ModelSpec::ks_qubit(), basis_state(2, 0));
  const Context q = Context::computational(2, 2);
  int hits = 0;
  for (int k = 0; k < 10000; ++k) hits += outcome_of(sample(at0, rng, Sampler::conditional), q) == 0;
  CHECK(hits == 10000);

  // Outcome 1 is unreachable from a qubit prior centered on |0>.
  CHECK_THROWS_AS(bayes_update(at0, q, 1, rng, 2000), ZeroProbabilityOutcome);
}

TEST_CASE("faithful_analytic") {
  const PureState l0 = basis_state(3, 0);
  CHECK(faithful_analytic(l0, l0));
  const PureState p = make_pure_state({std::sqrt(0.4), std::sqrt(0.6), 0.0});
  CHECK_FALSE(faithful_analytic(p, l0));
}

TEST_CASE("faithful_sampled") {
  RandomStream rng = make_stream(44, 0);
  const PureState l0 = basis_state(3, 0);
  CHECK(faithful_sampled(l0, l0, 500, rng));
  CHECK_FALSE(faithful_sampled(basis_state(3, 1), l0, 10, rng));

  // Overlap 0.4: a flipping context exists and is found by search.
  const PureState p = make_pure_state({std::sqrt(0.4), std::sqrt(0.6), 0.0});
  CHECK_FALSE(faithful_sampled(p, l0, 1000, rng));
  CHECK_FALSE(faithful_sampled(p, Context::computational(3, 3), 1000, rng));

  // With Δ = 1/2 the support boundary is the faithful boundary.
  const double x = 0.5 + 1e-3;
  const PureState inside = make_pure_state({std::sqrt(x), std::sqrt(1 - x), 0.0});
  CHECK(faithful_analytic(inside, l0));
  CHECK(faithful_sampled(inside, l0, 1000, rng));
  const double y = 0.5 - 1e-3;
  const PureState outside = make_pure_state({std::sqrt(y), std::sqrt((1 - y) / 2),
                                             std::sqrt((1 - y) / 2)});
  CHECK_FALSE(faithful_analytic(outside, l0));
}

TEST_CASE("context_containing") {
  RandomStream rng = make_stream(45, 0);
  const PureState l0 = haar_state(4, rng);
  const Context c = context_containing(l0);
  CHECK(c.system_dim() == 4);
  CHECK(distance(c[0], l0) < 1e-14);
}
