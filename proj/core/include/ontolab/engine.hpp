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

#ifndef ONTOLAB_ENGINE_HPP
#define ONTOLAB_ENGINE_HPP

// Seeded Monte Carlo estimators.
//
// Parallel contract: n samples are cut into fixed-size batches; batch k draws
// from make_stream(seed, k) and produces integer tallies, which are summed.
// Tallies therefore depend on (seed, n, batch_size) only; n_workers changes
// the wall time, never the result.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ontolab/marble.hpp"
#include "ontolab/measurement.hpp"
#include "ontolab/models.hpp"
#include "ontolab/projective.hpp"

namespace ontolab {

struct EngineOptions {
  int n_workers = 1;
  Sampler sampler = Sampler::conditional;
  std::int64_t batch_size = 8192;
};

/// Bernoulli estimate with a Wald standard error.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  int n_workers = 1;

  /// std_error = √(p̂(1-p̂)/n), or √(0.25/n) when p̂ is 0 or 1.
  static Estimate from_count(std::int64_t successes, std::int64_t n, std::uint64_t seed,
                             int n_workers);
};

/// Born-rule probabilities <ψ|Π_i|ψ> = overlap(embed(ψ, D), context[i]).
std::vector<double> born_probs(const PureState& psi, const Context& context);

/// One Estimate per outcome of `context`, from n samples of prepare(model, ψ).
/// The means sum to exactly 1.
std::vector<Estimate> estimate_outcome_probs(const ModelSpec& model, const PureState& psi,
                                             const Context& context, std::int64_t n,
                                             std::uint64_t seed, const EngineOptions& options = {});

/// cos θ |0> + sin θ |1> in C^d.
PureState superposition_01(int dim, double theta);

/// `count` equally spaced points on [start, stop] (count = 1 gives start).
std::vector<double> linspace(double start, double stop, int count);

struct SweepRow {
  double theta = 0.0;
  int outcome = 0;
  double qm_prob = 0.0;
  Estimate om_estimate;
  double delta = 0.0;
  std::string model;

  double deviation() const;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double deviation_score = 0.0;  ///< max over rows of |om - qm|
  std::size_t worst_row = 0;
};

/// Born-rule comparison for ψ(θ) = cos θ|0> + sin θ|1> against the
/// computational context, one row per (θ, outcome). Grid point j uses master
/// seed substream_seed(seed, j), so equal seeds give common random numbers
/// across models.
SweepResult deviation_sweep(const ModelSpec& model, const std::vector<double>& theta_grid,
                            std::int64_t n, std::uint64_t seed, const EngineOptions& options = {});

struct DeltaObjective {
  double delta = 0.0;
  ModelSpec model;
  SweepResult sweep;
};

struct DeltaOptimization {
  double best_delta = 0.0;
  std::vector<DeltaObjective> table;
};

/// argmin over the grid of the deviation score (lowest Δ on ties), every
/// grid point evaluated with the same seed.
DeltaOptimization optimize_delta(const ModelSpec& family, const std::vector<double>& delta_grid,
                                 const std::vector<double>& theta_grid, std::int64_t n,
                                 std::uint64_t seed, const EngineOptions& options = {});

/// Haar measure on CP^{D-1}.
struct HaarLaw {};
using SamplingLaw = std::variant<HaarLaw, EpistemicState>;

struct UnfaithfulResult {
  /// Outcome 0 under the base context, another outcome under at least one of
  /// the rotated contexts.
  Estimate sampled;
  /// Outcome 0 under the base context and overlap(λ, λ₀) ≤ 1/2.
  Estimate analytic;
};

/// Rotations fix context[0] and act on the span of the remaining elements
/// (unitary_fixing_first_element).
UnfaithfulResult unfaithful_fraction(const Context& context, const SamplingLaw& law,
                                     std::int64_t n, int n_contexts, std::uint64_t seed,
                                     const EngineOptions& options = {});

enum class UpdateRule { collapse, bayes };

std::string_view to_string(UpdateRule rule);
UpdateRule parse_update_rule(std::string_view name);

/// P(second outcome = first outcome) for a repeated measurement of `context`.
/// Throws ZeroProbabilityOutcome from bayes_update.
Estimate repeatability_run(const ModelSpec& model, const PureState& psi, const Context& context,
                           UpdateRule update, std::int64_t n, std::uint64_t seed,
                           const EngineOptions& options = {});

struct SequentialStep {
  std::vector<Estimate> outcome_freq;
  std::vector<double> qm_prob;
  /// Fraction of trials whose outcome at this step equals the step-0 outcome
  /// (meaningful when both contexts have the same size).
  Estimate agreement_with_first;
  double qm_agreement_with_first = 0.0;
};

struct SequentialResult {
  std::vector<SequentialStep> steps;
};

/// Measurement chain under `update`. Collapse re-centers and resamples after
/// each step. The Bayes chain keeps one ontic state throughout, which is an
/// exact draw from the successive filtered posteriors. QM columns use the
/// projective (Lüders) update.
SequentialResult sequential_run(const ModelSpec& model, const PureState& psi,
                                const std::vector<Context>& contexts, UpdateRule update,
                                std::int64_t n, std::uint64_t seed,
                                const EngineOptions& options = {});

/// Probability of green for a marble prepared with peak n and measured along
/// m.
Estimate marble_green_probability(const RealSphereState& n, const RealSphereState& m,
                                  std::int64_t samples, std::uint64_t seed,
                                  const EngineOptions& options = {});

}  // namespace ontolab

#endif  // ONTOLAB_ENGINE_HPP
