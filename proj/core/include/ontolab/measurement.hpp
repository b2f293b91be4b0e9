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

#ifndef ONTOLAB_MEASUREMENT_HPP
#define ONTOLAB_MEASUREMENT_HPP

// Deterministic response functions: an ontic state gives the outcome whose
// central element it is closest to (largest overlap), ties to the lowest
// index.

#include <cstdint>

#include "ontolab/models.hpp"
#include "ontolab/projective.hpp"
#include "ontolab/random.hpp"

namespace ontolab {

/// argmax_i overlap(λ, context[i]), lowest index on ties.
int outcome_of(const PureState& lambda, const Context& context);

/// χ_i(λ): 1 iff outcome_of(λ, context) == i. Throws IndexOutOfRange.
int characteristic(const PureState& lambda, const Context& context, int i);

/// Post-measurement state: same model, re-centered on context[i].
EpistemicState collapse_update(const ModelSpec& model, const Context& context, int i);

/// Posterior of a non-disturbing measurement, χ_i(λ) P(λ) / ∫ χ_i P,
/// represented as the prior's sampler filtered on outcome i.
class Posterior {
 public:
  const EpistemicState& prior() const { return prior_; }
  const Context& context() const { return context_; }
  int outcome() const { return outcome_; }
  std::int64_t budget() const { return budget_; }

  /// Throws ZeroProbabilityOutcome if `budget` consecutive prior draws all
  /// miss outcome i.
  PureState sample(RandomStream& rng, Sampler sampler = Sampler::conditional) const;

 private:
  friend Posterior bayes_update(const EpistemicState&, const Context&, int, RandomStream&,
                                std::int64_t);
  Posterior(EpistemicState prior, Context context, int outcome, std::int64_t budget)
      : prior_(std::move(prior)), context_(std::move(context)), outcome_(outcome), budget_(budget) {}

  EpistemicState prior_;
  Context context_;
  int outcome_;
  std::int64_t budget_;
};

inline constexpr std::int64_t kDefaultPosteriorBudget = 1'000'000;

/// Builds the posterior after checking, with up to `budget` prior draws, that
/// outcome i occurs at all. Throws ZeroProbabilityOutcome otherwise.
Posterior bayes_update(const EpistemicState& state, const Context& context, int i,
                       RandomStream& rng, std::int64_t budget = kDefaultPosteriorBudget);

/// Closed-form faithfulness: λ gives the λ₀ outcome in every context
/// containing λ₀ iff overlap(λ, λ₀) > 1/2 (strict).
bool faithful_analytic(const PureState& lambda, const PureState& lambda0);

/// Brute-force faithfulness: outcome 0 in each of `n_contexts` contexts
/// obtained by rotating {λ₀, complement basis} with unitary_fixing_axis(λ₀).
bool faithful_sampled(const PureState& lambda, const PureState& lambda0, int n_contexts,
                      RandomStream& rng);

/// As above, rotating an explicit base context with
/// unitary_fixing_first_element. base[0] plays the role of λ₀.
bool faithful_sampled(const PureState& lambda, const Context& base, int n_contexts,
                      RandomStream& rng);

/// Context whose first element is `lambda0`, completed by
/// orthonormal_complement(lambda0).
Context context_containing(const PureState& lambda0);

}  // namespace ontolab

#endif  // ONTOLAB_MEASUREMENT_HPP
