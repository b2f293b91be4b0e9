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
#include "ontolab/engine.hpp"
#include "ontolab/errors.hpp"

using namespace ontolab;
using std::numbers::pi;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

bool within(const Estimate& e, double expected, double k = 3.0) {
  return std::abs(e.mean - expected) <= k * e.std_error;
}

}  // namespace

TEST_CASE("Born probabilities") {
  const Context c = Context::computational(3, 3);
  const auto p = born_probs(superposition_01(3, 0.3), c);
  CHECK(p[0] == doctest::Approx(std::cos(0.3) * std::cos(0.3)));
  CHECK(p[1] == doctest::Approx(std::sin(0.3) * std::sin(0.3)));
  CHECK(p[2] == doctest::Approx(0.0));
  CHECK(born_probs(superposition_01(3, 0.0), c)[0] == doctest::Approx(1.0));
  const auto q = born_probs(superposition_01(3, pi / 4), c);
  CHECK(q[0] == doctest::Approx(0.5));
  CHECK(q[1] == doctest::Approx(0.5));
}

TEST_CASE("Wald standard error with the boundary convention") {
  const Estimate a = Estimate::from_count(25, 100, 1, 1);
  CHECK(a.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));
  CHECK(Estimate::from_count(0, 100, 1, 1).std_error == doctest::Approx(0.05));
  CHECK(Estimate::from_count(100, 100, 1, 1).std_error == doctest::Approx(0.05));
}

TEST_CASE("linspace") {
  const auto g = linspace(0.0, pi / 2, 19);
  REQUIRE(g.size() == 19);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(pi / 2));
  CHECK(g[9] == doctest::Approx(pi / 4));
  CHECK(linspace(0.3, 1.0, 1) == std::vector<double>{0.3});
  CHECK_THROWS_AS(linspace(0, 1, 0), Error);
}

TEST_CASE("qubit outcome probability at pi/6") {
  const auto e = estimate_outcome_probs(ModelSpec::ks_qubit(), superposition_01(2, pi / 6),
                                        Context::computational(2, 2), 100000, 51);
  CHECK(within(e[0], 0.75));
  CHECK(e[0].mean + e[1].mean == 1.0);
}

TEST_CASE("a state on a context element always gives that outcome when delta >= 1/2") {
  for (const ModelSpec& m : {ModelSpec::ks_qubit(), ModelSpec::linear_trace(3, 0.5),
                             ModelSpec::linear_trace(3, kInvSqrt3),
                             ModelSpec::uniform_embedded(2, 0.5)}) {
    CAPTURE(model_id(m));
    const auto e = estimate_outcome_probs(m, basis_state(m.system_dim, 0),
                                          Context::computational(m.system_dim, m.ontic_dim),
                                          20000, 52);
    CHECK(e[0].mean == 1.0);
  }
}

TEST_CASE("qutrit leakage into the third outcome") {
  const auto e = estimate_outcome_probs(ModelSpec::linear_trace(3, kInvSqrt3),
                                        superposition_01(3, pi / 4), Context::computational(3, 3),
                                        1000000, 2026);
  CHECK(e[2].mean > 5 * e[2].std_error);
  // Regression anchor from the first converged run (seed 2026, n = 10^6).
  CHECK(e[2].mean == doctest::Approx(0.002862).epsilon(1e-9));
}

TEST_CASE("sweeps") {
  const auto grid = linspace(0.0, pi / 2, 19);
  const SweepResult ks = deviation_sweep(ModelSpec::ks_qubit(), grid, 20000, 53);
  REQUIRE(ks.rows.size() == 38);
  CHECK(ks.rows[0].qm_prob == 1.0);
  CHECK(ks.rows[0].om_estimate.mean == 1.0);
  CHECK(ks.rows[0].deviation() == 0.0);
  double max_se = 0.0;
  for (const auto& r : ks.rows) max_se = std::max(max_se, r.om_estimate.std_error);
  CHECK(ks.deviation_score < 3 * max_se);

  const SweepResult q = deviation_sweep(ModelSpec::linear_trace(3, kInvSqrt3), grid, 20000, 53);
  CHECK(q.rows[0].om_estimate.mean == 1.0);
  CHECK(q.deviation_score > 0.05);
  // The worst point lies away from the equal superposition; see the notes on
  // the qutrit sweep in the README.
  CHECK(std::abs(q.rows[q.worst_row].theta - pi / 4) > 0.2);
}

TEST_CASE("equal seeds give equal sweeps") {
  const auto grid = linspace(0.0, pi / 2, 5);
  const auto a = deviation_sweep(ModelSpec::linear_trace(3, 0.5), grid, 10000, 54);
  const auto b = deviation_sweep(ModelSpec::linear_trace(3, 0.5), grid, 10000, 54);
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(a.rows[i].om_estimate.mean == b.rows[i].om_estimate.mean);
}

TEST_CASE("worker count does not change tallies") {
  const ModelSpec m = ModelSpec::linear_trace(3, kInvSqrt3);
  const PureState psi = superposition_01(3, 0.6);
  const Context c = Context::computational(3, 3);
  EngineOptions one, many;
  many.n_workers = 8;
  const auto a = estimate_outcome_probs(m, psi, c, 50000, 55, one);
  const auto b = estimate_outcome_probs(m, psi, c, 50000, 55, many);
  for (int i = 0; i < 3; ++i) CHECK(a[i].mean == b[i].mean);
}

TEST_CASE("delta optimization") {
  const auto grid = linspace(0.0, pi / 2, 10);
  const DeltaOptimization ks =
      optimize_delta(ModelSpec::ks_qubit(), {0.3, 0.5, 0.7}, grid, 20000, 56);
  CHECK(ks.best_delta == 0.5);
  REQUIRE(ks.table.size() == 3);
  CHECK(ks.table[1].sweep.deviation_score < 0.01);

  const DeltaOptimization single =
      optimize_delta(ModelSpec::linear_trace(3, 0.5), {0.45}, grid, 5000, 56);
  CHECK(single.best_delta == 0.45);

  const DeltaOptimization qutrit = optimize_delta(
      ModelSpec::linear_trace(3, 0.5), {0.4, kInvSqrt3, 2.0 / 3.0}, linspace(0, pi / 2, 19),
      20000, 2026);
  const double s04 = qutrit.table[0].sweep.deviation_score;
  const double s_mid = qutrit.table[1].sweep.deviation_score;
  const double s23 = qutrit.table[2].sweep.deviation_score;
  CHECK(s_mid < s23);
  // Measured ordering: the coarser 0.4 beats 1/√3 on this objective.
  CHECK(s04 < s_mid);
}

TEST_CASE("unfaithful fraction") {
  const Context c = Context::computational(3, 3);
  const UnfaithfulResult centered =
      unfaithful_fraction(c, prepare(ModelSpec::linear_trace(3, 0.5), basis_state(3, 0)), 20000,
                          50, 57);
  CHECK(centered.sampled.mean == 0.0);
  CHECK(centered.analytic.mean == 0.0);

  const UnfaithfulResult haar = unfaithful_fraction(c, HaarLaw{}, 10000, 1000, 58);
  CHECK(haar.sampled.mean > 3 * haar.sampled.std_error);
  CHECK(std::abs(haar.sampled.mean - haar.analytic.mean) <= 3 * haar.sampled.std_error);
  // Overlaps with a Haar qutrit context are uniform on the simplex, so
  // P(outcome 0 and t0 <= 1/2) = 1/3 - 1/4.
  CHECK(within(haar.analytic, 1.0 / 12.0));
}

TEST_CASE("repeatability") {
  const Context c = Context::computational(3, 3);
  const PureState psi = superposition_01(3, 0.5);
  CHECK(repeatability_run(ModelSpec::linear_trace(3, kInvSqrt3), psi, c, UpdateRule::collapse,
                          10000, 59)
            .mean == 1.0);
  const Estimate low =
      repeatability_run(ModelSpec::linear_trace(3, 0.4), psi, c, UpdateRule::collapse, 10000, 59);
  CHECK(low.mean < 1.0 - 3 * low.std_error);
  for (const ModelSpec& m :
       {ModelSpec::linear_trace(3, 0.4), ModelSpec::linear_trace(3, kInvSqrt3)})
    CHECK(repeatability_run(m, psi, c, UpdateRule::bayes, 10000, 60).mean == 1.0);
  CHECK(parse_update_rule("bayes") == UpdateRule::bayes);
  CHECK_THROWS_AS(parse_update_rule("lueders"), Error);
}

TEST_CASE("sequential chains") {
  const ModelSpec m = ModelSpec::linear_trace(3, kInvSqrt3);
  const PureState psi = superposition_01(3, 0.5);
  const Context a = Context::computational(3, 3);
  ComplexMatrix r = ComplexMatrix::Identity(3, 3);
  r(0, 0) = r(1, 1) = std::cos(0.6);
  r(0, 1) = -std::sin(0.6);
  r(1, 0) = std::sin(0.6);
  const Context b = rotate_context(Unitary::from_matrix(r), a);

  const SequentialResult single = sequential_run(m, psi, {a}, UpdateRule::collapse, 20000, 61);
  const auto direct = estimate_outcome_probs(m, psi, a, 20000, 61);
  for (int i = 0; i < 3; ++i) CHECK(single.steps[0].outcome_freq[i].mean == direct[i].mean);

  const SequentialResult aa = sequential_run(m, psi, {a, a}, UpdateRule::collapse, 20000, 62);
  CHECK(aa.steps[1].agreement_with_first.mean == 1.0);
  CHECK(aa.steps[1].qm_agreement_with_first == doctest::Approx(1.0));

  const SequentialResult bayes = sequential_run(m, psi, {a, b, a}, UpdateRule::bayes, 20000, 63);
  const SequentialResult coll = sequential_run(m, psi, {a, b, a}, UpdateRule::collapse, 20000, 63);
  const double qm = bayes.steps[2].qm_agreement_with_first;
  CHECK(qm == doctest::Approx(coll.steps[2].qm_agreement_with_first));
  CHECK(bayes.steps[2].agreement_with_first.mean > qm);
  CHECK(std::abs(coll.steps[2].agreement_with_first.mean - qm) <
        std::abs(bayes.steps[2].agreement_with_first.mean - qm));
}

TEST_CASE("engine input validation") {
  CHECK_THROWS_AS(estimate_outcome_probs(ModelSpec::ks_qubit(), basis_state(3, 0),
                                         Context::computational(2, 2), 10, 1),
                  DimensionMismatch);
  CHECK_THROWS_AS(estimate_outcome_probs(ModelSpec::marble_world(), basis_state(2, 0),
                                         Context::computational(2, 3), 10, 1),
                  InvalidModel);
}
