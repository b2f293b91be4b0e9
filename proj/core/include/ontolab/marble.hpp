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

#ifndef ONTOLAB_MARBLE_HPP
#define ONTOLAB_MARBLE_HPP

// Marble world: a marble on the real unit sphere, observed from antipodal
// directions. The ontic state is a RealSphereState and the epistemic density
// is the marble-world weight of the overlap λ·n (see models.hpp).

#include "ontolab/models.hpp"
#include "ontolab/projective.hpp"
#include "ontolab/random.hpp"

namespace ontolab {

enum class MarbleColor { green = 0, red = 1 };

/// Unnormalized density 2(λ·n)² - 1 on λ·n ≥ 1/√2, zero elsewhere.
double marble_density(const RealSphereState& n, const RealSphereState& lambda);

/// Green iff the marble sits in the closed hemisphere around m.
MarbleColor marble_outcome(const RealSphereState& lambda, const RealSphereState& m);

/// Normalized marble-world state peaked at n.
class MarbleState {
 public:
  explicit MarbleState(const RealSphereState& n);

  const RealSphereState& center() const { return n_; }
  /// With respect to the normalized uniform measure on the sphere.
  double normalization() const { return law_.normalization(); }
  const OverlapLaw& overlap_law() const { return law_; }

 private:
  RealSphereState n_;
  OverlapLaw law_;
};

RealSphereState uniform_sphere_point(RandomStream& rng);

RealSphereState sample_rejection(const MarbleState& state, RandomStream& rng);
RealSphereState sample_conditional(const MarbleState& state, RandomStream& rng);
RealSphereState sample(const MarbleState& state, RandomStream& rng, Sampler sampler);

/// Angle-doubling map from the marble sphere to a qubit: the point at polar
/// angle β and azimuth φ (about +z) goes to cos β|0> + e^{iφ} sin β|1>,
/// whose Bloch vector has polar angle 2β. Under this map the marble density
/// about +z is twice the ks-qubit weight about |0>.
PureState marble_to_qubit(const RealSphereState& lambda);

}  // namespace ontolab

#endif  // ONTOLAB_MARBLE_HPP
