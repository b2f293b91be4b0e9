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

#ifndef ONTOLAB_PROJECTIVE_HPP
#define ONTOLAB_PROJECTIVE_HPP

// Small-dimension complex projective geometry: pure states up to global
// phase, unitaries, measurement contexts and unitarily invariant sampling.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ontolab/random.hpp"

namespace ontolab {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// Orthonormality tolerance used when validating unitaries and contexts.
inline constexpr double kOrthoTolerance = 1e-10;

using Complex = std::complex<double>;

// Dynamic size with a compile-time upper bound: storage lives inline, no heap.
using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

/// A unit vector in C^dim modulo global phase.
///
/// Stored canonically: normalized, and the lowest-index component of largest
/// magnitude is real and nonnegative. Two PureStates describing the same ray
/// therefore compare equal up to rounding.
class PureState {
 public:
  /// Normalizes and canonicalizes. Throws ZeroVector if the norm is below
  /// 1e-14 and InvalidDimension outside 2..8.
  static PureState from_amplitudes(const Amplitudes& amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex operator[](int k) const { return amplitudes_[k]; }

 private:
  explicit PureState(Amplitudes canonical) : amplitudes_(std::move(canonical)) {}

  Amplitudes amplitudes_;
};

PureState make_pure_state(std::span<const Complex> amplitudes);
PureState make_pure_state(std::initializer_list<Complex> amplitudes);

/// Computational basis vector |k> in C^dim.
PureState basis_state(int dim, int k);

/// Tr(λ₁λ₂) = |<a|b>|², clamped to [0, 1].
double overlap(const PureState& a, const PureState& b);

/// 1 - overlap(a, b).
double distance(const PureState& a, const PureState& b);

/// <a|b>; depends on the canonical phases of a and b.
Complex inner(const PureState& a, const PureState& b);

class Unitary {
 public:
  /// Throws NotUnitary if U†U deviates from the identity by more than
  /// kOrthoTolerance in any entry.
  static Unitary from_matrix(const ComplexMatrix& matrix);
  static Unitary identity(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  Unitary operator*(const Unitary& rhs) const;
  Unitary adjoint() const;

 private:
  explicit Unitary(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

/// An ordered list of mutually orthogonal central elements. Outcome indices
/// always refer to list position.
class Context {
 public:
  /// Throws NonOrthogonalContext when two elements overlap by more than
  /// kOrthoTolerance, DimensionMismatch when element dimensions differ or
  /// there are more elements than the ontic dimension.
  static Context from_elements(std::vector<PureState> elements);

  /// {|0>, ..., |d-1>} embedded into C^ontic_dim.
  static Context computational(int system_dim, int ontic_dim);

  int system_dim() const { return static_cast<int>(elements_.size()); }
  int ontic_dim() const { return elements_.front().dim(); }
  const std::vector<PureState>& elements() const { return elements_; }
  const PureState& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }

 private:
  explicit Context(std::vector<PureState> elements) : elements_(std::move(elements)) {}

  std::vector<PureState> elements_;
};

/// Point of the real unit 2-sphere.
class RealSphereState {
 public:
  /// Throws ZeroVector if the norm is below 1e-14.
  static RealSphereState from_vector(const Eigen::Vector3d& v);
  /// Unit vector at polar angle `theta` and azimuth `phi`.
  static RealSphereState from_angles(double theta, double phi);

  const Eigen::Vector3d& vector() const { return v_; }
  double dot(const RealSphereState& other) const { return v_.dot(other.v_); }

 private:
  explicit RealSphereState(const Eigen::Vector3d& v) : v_(v) {}

  Eigen::Vector3d v_;
};

/// Vector of `dim` independent standard complex Gaussians (real and imaginary
/// parts N(0,1)).
Amplitudes gaussian_amplitudes(int dim, RandomStream& rng);

/// Pure state from the unitarily invariant (Haar) measure on CP^{dim-1}.
PureState haar_state(int dim, RandomStream& rng);

/// Haar-random unitary: Gram-Schmidt with a re-orthogonalization pass on a
/// matrix of complex Gaussians.
Unitary haar_unitary(int dim, RandomStream& rng);

/// First `system_dim` columns of a Haar unitary of size system_dim, embedded
/// into C^ontic_dim.
Context haar_context(int system_dim, int ontic_dim, RandomStream& rng);

/// Pads with zeros up to `target_dim`. Throws DimensionMismatch if
/// target_dim < state.dim().
PureState embed(const PureState& state, int target_dim);
Context embed(const Context& context, int target_dim);

/// Keeps the first `dim` amplitudes and renormalizes. Inverse of embed on
/// embedded states; throws ZeroVector if nothing is left.
PureState restrict_to(const PureState& state, int dim);

PureState apply_unitary(const Unitary& u, const PureState& state);
Context rotate_context(const Unitary& u, const Context& context);

/// Orthonormal basis (as columns) of the complement of `axis`.
ComplexMatrix orthonormal_complement(const PureState& axis);

/// Unitary that fixes `axis` and acts as a Haar-random unitary on its
/// orthogonal complement.
Unitary unitary_fixing_axis(const PureState& axis, RandomStream& rng);

/// Unitary that fixes `axis` and rotates the plane spanned by the first two
/// complement basis vectors by `angle`. In dimension 2 the complement is a
/// line and the rotation reduces to the phase e^{i angle}.
Unitary unitary_fixing_axis(const PureState& axis, double angle);

/// Unitary that fixes context[0] and the orthogonal complement of the
/// context's span, and acts Haar-randomly on span{context[1..d-1]}. For a
/// full context (d = D) this has the same law as unitary_fixing_axis.
Unitary unitary_fixing_first_element(const Context& context, RandomStream& rng);

}  // namespace ontolab

#endif  // ONTOLAB_PROJECTIVE_HPP
