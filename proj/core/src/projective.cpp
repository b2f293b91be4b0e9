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

#include "ontolab/projective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

constexpr double kZeroNorm = 1e-14;
// Relative slack when comparing magnitudes for the canonical-phase pivot, so
// that re-canonicalizing a canonical vector picks the same pivot.
constexpr double kPivotSlack = 1e-12;

void check_dim(int dim) {
  if (dim < kMinDim || dim > kMaxDim) throw InvalidDimension(dim);
}

Amplitudes canonicalize(Amplitudes v) {
  const double norm = v.norm();
  if (!(norm >= kZeroNorm)) throw ZeroVector();
  v /= norm;

  double largest = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) largest = std::max(largest, std::abs(v[k]));
  Eigen::Index pivot = 0;
  while (std::abs(v[pivot]) < largest * (1.0 - kPivotSlack)) ++pivot;

  const double mag = std::abs(v[pivot]);
  v *= std::conj(v[pivot]) / mag;
  v[pivot] = Complex(std::abs(v[pivot]), 0.0);
  return v;
}

// Classical Gram-Schmidt applied twice per column (CGS2). Columns of `m` are
// orthonormalized in place; returns false if a column is numerically
// dependent on its predecessors.
bool orthonormalize_columns(ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < j; ++k) {
        const Complex proj = m.col(k).dot(m.col(j));
        m.col(j) -= proj * m.col(k);
      }
    }
    const double norm = m.col(j).norm();
    if (norm < 1e-10) return false;
    m.col(j) /= norm;
  }
  return true;
}

// Haar unitary of any size n >= 1 (n = 1 gives a uniform phase).
ComplexMatrix haar_matrix(int n, RandomStream& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  } while (!orthonormalize_columns(m));
  return m;
}

ComplexMatrix projector(const PureState& s) {
  return s.amplitudes() * s.amplitudes().adjoint();
}

}  // namespace

PureState PureState::from_amplitudes(const Amplitudes& amplitudes) {
  check_dim(static_cast<int>(amplitudes.size()));
  return PureState(canonicalize(amplitudes));
}

PureState make_pure_state(std::span<const Complex> amplitudes) {
  check_dim(static_cast<int>(amplitudes.size()));
  Amplitudes v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t k = 0; k < amplitudes.size(); ++k) v[static_cast<Eigen::Index>(k)] = amplitudes[k];
  return PureState::from_amplitudes(v);
}

PureState make_pure_state(std::initializer_list<Complex> amplitudes) {
  return make_pure_state(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

PureState basis_state(int dim, int k) {
  check_dim(dim);
  if (k < 0 || k >= dim) throw IndexOutOfRange(k, dim);
  Amplitudes v = Amplitudes::Zero(dim);
  v[k] = 1.0;
  return PureState::from_amplitudes(v);
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner", a.dim(), b.dim());
  return a.amplitudes().dot(b.amplitudes());
}

double overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("overlap", a.dim(), b.dim());
  return std::clamp(std::norm(a.amplitudes().dot(b.amplitudes())), 0.0, 1.0);
}

double distance(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("distance", a.dim(), b.dim());
  return 1.0 - overlap(a, b);
}

Unitary Unitary::from_matrix(const ComplexMatrix& matrix) {
  if (matrix.rows() != matrix.cols())
    throw NotUnitary("matrix is not square");
  check_dim(static_cast<int>(matrix.rows()));
  const ComplexMatrix defect =
      matrix.adjoint() * matrix - ComplexMatrix::Identity(matrix.rows(), matrix.cols());
  if (defect.cwiseAbs().maxCoeff() > kOrthoTolerance)
    throw NotUnitary("U^dagger U differs from the identity by " +
                     std::to_string(defect.cwiseAbs().maxCoeff()));
  return Unitary(matrix);
}

Unitary Unitary::identity(int dim) {
  check_dim(dim);
  return Unitary(ComplexMatrix::Identity(dim, dim));
}

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim() != rhs.dim()) throw DimensionMismatch("unitary product", dim(), rhs.dim());
  return Unitary(matrix_ * rhs.matrix_);
}

Unitary Unitary::adjoint() const { return Unitary(matrix_.adjoint()); }

Context Context::from_elements(std::vector<PureState> elements) {
  if (elements.size() < static_cast<std::size_t>(kMinDim))
    throw DimensionMismatch("a context needs at least two elements");
  const int ontic = elements.front().dim();
  for (const auto& e : elements)
    if (e.dim() != ontic) throw DimensionMismatch("context element", ontic, e.dim());
  if (static_cast<int>(elements.size()) > ontic)
    throw DimensionMismatch("context has more elements than the ontic dimension");
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (overlap(elements[i], elements[j]) > kOrthoTolerance)
        throw NonOrthogonalContext("context elements " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are not orthogonal");
  return Context(std::move(elements));
}

Context Context::computational(int system_dim, int ontic_dim) {
  check_dim(system_dim);
  check_dim(ontic_dim);
  if (ontic_dim < system_dim) throw DimensionMismatch("embed", system_dim, ontic_dim);
  std::vector<PureState> elements;
  for (int i = 0; i < system_dim; ++i) elements.push_back(basis_state(ontic_dim, i));
  return Context(std::move(elements));
}

RealSphereState RealSphereState::from_vector(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (!(norm >= kZeroNorm)) throw ZeroVector();
  return RealSphereState(v / norm);
}

RealSphereState RealSphereState::from_angles(double theta, double phi) {
  return RealSphereState(Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                                         std::sin(theta) * std::sin(phi), std::cos(theta)));
}

Amplitudes gaussian_amplitudes(int dim, RandomStream& rng) {
  std::normal_distribution<double> normal;
  Amplitudes g(dim);
  for (int k = 0; k < dim; ++k) g[k] = Complex(normal(rng), normal(rng));
  return g;
}

PureState haar_state(int dim, RandomStream& rng) {
  check_dim(dim);
  for (;;) {
    Amplitudes g = gaussian_amplitudes(dim, rng);
    if (g.norm() >= kZeroNorm) return PureState::from_amplitudes(g);
  }
}

Unitary haar_unitary(int dim, RandomStream& rng) {
  check_dim(dim);
  return Unitary::from_matrix(haar_matrix(dim, rng));
}

Context haar_context(int system_dim, int ontic_dim, RandomStream& rng) {
  check_dim(system_dim);
  check_dim(ontic_dim);
  if (ontic_dim < system_dim) throw DimensionMismatch("haar_context", system_dim, ontic_dim);
  const ComplexMatrix u = haar_matrix(system_dim, rng);
  std::vector<PureState> elements;
  elements.reserve(static_cast<std::size_t>(system_dim));
  for (int i = 0; i < system_dim; ++i)
    elements.push_back(embed(PureState::from_amplitudes(u.col(i)), ontic_dim));
  return Context::from_elements(std::move(elements));
}

PureState embed(const PureState& state, int target_dim) {
  check_dim(target_dim);
  if (target_dim < state.dim()) throw DimensionMismatch("embed", state.dim(), target_dim);
  Amplitudes v = Amplitudes::Zero(target_dim);
  v.head(state.dim()) = state.amplitudes();
  return PureState::from_amplitudes(v);
}

Context embed(const Context& context, int target_dim) {
  std::vector<PureState> elements;
  for (const auto& e : context.elements()) elements.push_back(embed(e, target_dim));
  return Context::from_elements(std::move(elements));
}

PureState restrict_to(const PureState& state, int dim) {
  check_dim(dim);
  if (dim > state.dim()) throw DimensionMismatch("restrict_to", state.dim(), dim);
  return PureState::from_amplitudes(state.amplitudes().head(dim));
}

PureState apply_unitary(const Unitary& u, const PureState& state) {
  if (u.dim() != state.dim()) throw DimensionMismatch("apply_unitary", u.dim(), state.dim());
  return PureState::from_amplitudes(u.matrix() * state.amplitudes());
}

Context rotate_context(const Unitary& u, const Context& context) {
  std::vector<PureState> elements;
  elements.reserve(context.elements().size());
  for (const auto& e : context.elements()) elements.push_back(apply_unitary(u, e));
  return Context::from_elements(std::move(elements));
}

ComplexMatrix orthonormal_complement(const PureState& axis) {
  const int dim = axis.dim();
  ComplexMatrix basis(dim, dim);
  basis.col(0) = axis.amplitudes();
  int filled = 1;
  for (int k = 0; k < dim && filled < dim; ++k) {
    basis.col(filled) = Amplitudes::Unit(dim, k);
    ComplexMatrix trial = basis.leftCols(filled + 1);
    if (orthonormalize_columns(trial)) {
      basis.leftCols(filled + 1) = trial;
      ++filled;
    }
  }
  return basis.rightCols(dim - 1);
}

Unitary unitary_fixing_axis(const PureState& axis, RandomStream& rng) {
  const ComplexMatrix q = orthonormal_complement(axis);
  const ComplexMatrix w = haar_matrix(axis.dim() - 1, rng);
  return Unitary::from_matrix(projector(axis) + q * w * q.adjoint());
}

Unitary unitary_fixing_axis(const PureState& axis, double angle) {
  const int dim = axis.dim();
  const ComplexMatrix q = orthonormal_complement(axis);
  ComplexMatrix r = ComplexMatrix::Identity(dim - 1, dim - 1);
  if (dim == 2) {
    r(0, 0) = std::polar(1.0, angle);
  } else {
    r(0, 0) = std::cos(angle);
    r(0, 1) = -std::sin(angle);
    r(1, 0) = std::sin(angle);
    r(1, 1) = std::cos(angle);
  }
  return Unitary::from_matrix(projector(axis) + q * r * q.adjoint());
}

Unitary unitary_fixing_first_element(const Context& context, RandomStream& rng) {
  const int dim = context.ontic_dim();
  const int rest = context.system_dim() - 1;
  ComplexMatrix b(dim, rest);
  for (int j = 0; j < rest; ++j) b.col(j) = context[j + 1].amplitudes();
  const ComplexMatrix w = haar_matrix(rest, rng);
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  return Unitary::from_matrix(id - b * b.adjoint() + b * w * b.adjoint());
}

}  // namespace ontolab
