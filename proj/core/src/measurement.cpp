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

#include "ontolab/measurement.hpp"

#include <vector>

#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

void check_index(const Context& context, int i) {
  if (i < 0 || i >= context.system_dim()) throw IndexOutOfRange(i, context.system_dim());
}

// Outcome of the amplitudes v against the rotated context U·base, evaluated
// as overlaps of U†v with the unrotated elements.
int rotated_outcome(const Amplitudes& rotated_lambda, const Context& base) {
  int best = 0;
  double best_overlap = -1.0;
  for (int i = 0; i < base.system_dim(); ++i) {
    const double t = std::norm(base[i].amplitudes().dot(rotated_lambda));
    if (t > best_overlap) {
      best_overlap = t;
      best = i;
    }
  }
  return best;
}

}  // namespace

int outcome_of(const PureState& lambda, const Context& context) {
  if (lambda.dim() != context.ontic_dim())
    throw DimensionMismatch("outcome_of", context.ontic_dim(), lambda.dim());
  int best = 0;
  double best_overlap = -1.0;
  for (int i = 0; i < context.system_dim(); ++i) {
    const double t = overlap(lambda, context[i]);
    if (t > best_overlap) {
      best_overlap = t;
      best = i;
    }
  }
  return best;
}

int characteristic(const PureState& lambda, const Context& context, int i) {
  check_index(context, i);
  return outcome_of(lambda, context) == i ? 1 : 0;
}

EpistemicState collapse_update(const ModelSpec& model, const Context& context, int i) {
  check_index(context, i);
  return EpistemicState(model, context[i]);
}

PureState Posterior::sample(RandomStream& rng, Sampler sampler) const {
  for (std::int64_t attempt = 0; attempt < budget_; ++attempt) {
    PureState lambda = ontolab::sample(prior_, rng, sampler);
    if (outcome_of(lambda, context_) == outcome_) return lambda;
  }
  throw ZeroProbabilityOutcome(outcome_, budget_);
}

Posterior bayes_update(const EpistemicState& state, const Context& context, int i,
                       RandomStream& rng, std::int64_t budget) {
  check_index(context, i);
  if (context.ontic_dim() != state.center().dim())
    throw DimensionMismatch("bayes_update", state.center().dim(), context.ontic_dim());
  Posterior posterior(state, context, i, budget);
  posterior.sample(rng);
  return posterior;
}

bool faithful_analytic(const PureState& lambda, const PureState& lambda0) {
  return overlap(lambda, lambda0) > 0.5;
}

Context context_containing(const PureState& lambda0) {
  const ComplexMatrix q = orthonormal_complement(lambda0);
  std::vector<PureState> elements{lambda0};
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    elements.push_back(PureState::from_amplitudes(q.col(j)));
  return Context::from_elements(std::move(elements));
}

bool faithful_sampled(const PureState& lambda, const PureState& lambda0, int n_contexts,
                      RandomStream& rng) {
  if (lambda.dim() != lambda0.dim())
    throw DimensionMismatch("faithful_sampled", lambda0.dim(), lambda.dim());
  const Context base = context_containing(lambda0);
  for (int k = 0; k < n_contexts; ++k) {
    const Unitary u = unitary_fixing_axis(lambda0, rng);
    if (rotated_outcome(u.matrix().adjoint() * lambda.amplitudes(), base) != 0) return false;
  }
  return true;
}

bool faithful_sampled(const PureState& lambda, const Context& base, int n_contexts,
                      RandomStream& rng) {
  if (lambda.dim() != base.ontic_dim())
    throw DimensionMismatch("faithful_sampled", base.ontic_dim(), lambda.dim());
  for (int k = 0; k < n_contexts; ++k) {
    const Unitary u = unitary_fixing_first_element(base, rng);
    if (rotated_outcome(u.matrix().adjoint() * lambda.amplitudes(), base) != 0) return false;
  }
  return true;
}

}  // namespace ontolab
