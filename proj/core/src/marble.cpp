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

#include "ontolab/marble.hpp"

#include <cmath>
#include <numbers>

namespace ontolab {

double marble_density(const RealSphereState& n, const RealSphereState& lambda) {
  return weight(ModelSpec::marble_world(), lambda.dot(n));
}

MarbleColor marble_outcome(const RealSphereState& lambda, const RealSphereState& m) {
  return lambda.dot(m) >= 0.0 ? MarbleColor::green : MarbleColor::red;
}

MarbleState::MarbleState(const RealSphereState& n) : n_(n), law_(ModelSpec::marble_world()) {}

RealSphereState uniform_sphere_point(RandomStream& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
    if (v.norm() > 1e-12) return RealSphereState::from_vector(v);
  }
}

RealSphereState sample_rejection(const MarbleState& state, RandomStream& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (;;) {
    RealSphereState proposal = uniform_sphere_point(rng);
    const double w = marble_density(state.center(), proposal);
    if (w > 0.0 && uniform(rng) < w) return proposal;
  }
}

RealSphereState sample_conditional(const MarbleState& state, RandomStream& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double p = 0.0;
  do { p = uniform(rng); } while (p == 0.0);
  const double x = state.overlap_law().quantile(p);
  const double phi = 2.0 * std::numbers::pi * uniform(rng);

  const Eigen::Vector3d& n = state.center().vector();
  // Any unit vector not parallel to n seeds the tangent frame.
  const Eigen::Vector3d seed =
      std::abs(n.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - seed.dot(n) * n).normalized();
  const Eigen::Vector3d e2 = n.cross(e1);
  const double r = std::sqrt(std::max(0.0, 1.0 - x * x));
  return RealSphereState::from_vector(x * n + r * (std::cos(phi) * e1 + std::sin(phi) * e2));
}

RealSphereState sample(const MarbleState& state, RandomStream& rng, Sampler sampler) {
  return sampler == Sampler::rejection ? sample_rejection(state, rng)
                                       : sample_conditional(state, rng);
}

PureState marble_to_qubit(const RealSphereState& lambda) {
  const Eigen::Vector3d& v = lambda.vector();
  const double beta = std::acos(std::clamp(v.z(), -1.0, 1.0));
  const double phi = std::atan2(v.y(), v.x());
  return make_pure_state({Complex(std::cos(beta), 0.0), std::polar(std::sin(beta), phi)});
}

}  // namespace ontolab
