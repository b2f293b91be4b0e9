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

#ifndef ONTOLAB_MODELS_HPP
#define ONTOLAB_MODELS_HPP

// Epistemic densities of the four model families. Every density depends on
// the ontic state only through its overlap t with the center, so
// normalization, marginals and the conditional sampler all reduce to
// one-dimensional problems against the reference-measure law of t.

#include <string>
#include <string_view>

#include "ontolab/projective.hpp"
#include "ontolab/random.hpp"

namespace ontolab {

enum class Variant {
  ks_qubit,          ///< d = D = 2, density ∝ max(t - 1/2, 0)
  marble_world,      ///< real 2-sphere, density ∝ 2(λ·n)² - 1 on λ·n ≥ 1/√2
  linear_trace,      ///< d = D, density ∝ max(t - Δ, 0)
  uniform_embedded,  ///< D = d + 1, density ∝ [t ≥ Δ]
};

std::string_view to_string(Variant v);
/// Throws InvalidModel on an unknown name.
Variant parse_variant(std::string_view name);

/// Support cutoff of the marble-world density on λ·n.
inline constexpr double kMarbleCutoff = 0.70710678118654752440;

struct ModelSpec {
  Variant variant = Variant::ks_qubit;
  int system_dim = 2;
  int ontic_dim = 2;
  double delta = 0.5;

  static ModelSpec ks_qubit();
  static ModelSpec marble_world();
  static ModelSpec linear_trace(int dim = 3, double delta = 0.57735026918962576451);
  static ModelSpec uniform_embedded(int system_dim = 2, double delta = 0.5);
  /// Validating constructor; throws InvalidModel naming the broken invariant.
  static ModelSpec make(Variant variant, int system_dim, int ontic_dim, double delta);

  void validate() const;

  /// Member of the same family with a different Δ. The ks-qubit family
  /// continues to Δ ≠ 1/2 as the linear-trace model with d = D = 2.
  ModelSpec with_delta(double new_delta) const;

  bool operator==(const ModelSpec&) const = default;
};

/// Compact CSV-safe identifier, e.g. "linear-trace-d3-D3".
std::string model_id(const ModelSpec& model);

/// Plain-text `key = value` fragment with keys variant, d, D, delta.
std::string to_fragment(const ModelSpec& model);
/// Inverse of to_fragment. Missing d/D/delta take the family defaults;
/// unknown keys and malformed values throw InvalidModel.
ModelSpec from_fragment(std::string_view text);

/// Unnormalized density as a function of the overlap t (for the marble
/// world, t is the dot product λ·n).
double weight(const ModelSpec& model, double t);

/// sup_t weight(model, t): 1 - Δ for the linear families, 1 otherwise.
double weight_max(const ModelSpec& model);

/// Lower end of the support in t (inclusive).
double support_lower(const ModelSpec& model);

/// Density of t for a reference-measure ontic state against a fixed state:
/// (D-1)(1-t)^{D-2} on [0,1] for CP^{D-1}, 1/2 on [-1,1] for the sphere.
double reference_marginal(const ModelSpec& model, double t);

/// N = 1 / ∫ weight(t) reference_marginal(t) dt. Closed form for the
/// polynomial families, adaptive Gauss-Kronrod otherwise.
double normalization(const ModelSpec& model);

/// Law of t under the epistemic state: N weight(t) reference_marginal(t).
class OverlapLaw {
 public:
  explicit OverlapLaw(const ModelSpec& model);

  double lower() const { return lower_; }
  double upper() const { return 1.0; }
  double normalization() const { return normalization_; }

  double pdf(double t) const;
  double cdf(double t) const;
  /// Inverse CDF. Closed form where the CDF inverts directly, otherwise
  /// bisection to an absolute tolerance of 1e-12 in t.
  double quantile(double p) const;

 private:
  ModelSpec model_;
  double lower_;
  double normalization_;
};

/// A normalized density over CP^{D-1}, centered on `center`.
class EpistemicState {
 public:
  /// Throws InvalidModel for the marble world (see MarbleState) and
  /// DimensionMismatch if center.dim() != model.ontic_dim.
  EpistemicState(const ModelSpec& model, PureState center);

  const ModelSpec& model() const { return model_; }
  const PureState& center() const { return center_; }
  double normalization() const { return law_.normalization(); }
  const OverlapLaw& overlap_law() const { return law_; }

 private:
  ModelSpec model_;
  PureState center_;
  OverlapLaw law_;
};

/// Epistemic state of a system prepared in |ψ> (dimension d), with the
/// center embedded into the ontic dimension.
EpistemicState prepare(const ModelSpec& model, const PureState& psi);

/// N weight(overlap(λ, center)) with respect to the normalized Haar measure.
double density_at(const EpistemicState& state, const PureState& lambda);

enum class Sampler { rejection, conditional };

std::string_view to_string(Sampler s);
Sampler parse_sampler(std::string_view name);

/// Haar proposal accepted with probability weight(t) / weight_max.
PureState sample_rejection(const EpistemicState& state, RandomStream& rng);

/// Draws t by inverse CDF, then λ = √t·center + √(1-t)·η with η Haar-random
/// in the orthogonal complement of the center.
PureState sample_conditional(const EpistemicState& state, RandomStream& rng);

PureState sample(const EpistemicState& state, RandomStream& rng, Sampler sampler);

}  // namespace ontolab

#endif  // ONTOLAB_MODELS_HPP
