// Copyright 2026 The Relaframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELAFRAME_SYMMETRY_HPP_
#define RELAFRAME_SYMMETRY_HPP_

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "relaframe/hilbert.hpp"

namespace relaframe {

//============================================================================
// NumberOperator
//============================================================================

// Integer spectrum, diagonal in the canonical basis. Repeats in the
// eigenvalue list represent degenerate eigenprojections; integrality keeps
// the phase-shift representation well defined on the circle.
class NumberOperator {
 public:
  NumberOperator(SpaceShape shape, std::vector<long long> eigenvalues)
      : shape_(std::move(shape)), eigs_(std::move(eigenvalues)) {
    if (static_cast<int>(eigs_.size()) != shape_.total()) {
      throw ShapeError("NumberOperator: eigenvalue list length " +
                       std::to_string(eigs_.size()) + " != dimension " +
                       std::to_string(shape_.total()));
    }
  }

  // The nondegenerate ladder 0, 1, ..., d-1.
  static NumberOperator ladder(int d) {
    std::vector<long long> e(d);
    for (int n = 0; n < d; ++n) e[n] = n;
    return NumberOperator(SpaceShape::single(d), std::move(e));
  }

  const SpaceShape& shape() const { return shape_; }
  int dim() const { return shape_.total(); }
  const std::vector<long long>& eigenvalues() const { return eigs_; }
  long long eigenvalue(int i) const { return eigs_[i]; }

  std::vector<long long> distinct_eigenvalues() const {
    std::set<long long> s(eigs_.begin(), eigs_.end());
    return {s.begin(), s.end()};
  }

  // Eigenprojection onto the eigenspace of the given value.
  Operator projector(long long value) const {
    Matrix p = Matrix::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      if (eigs_[i] == value) p(i, i) = 1.0;
    return Operator(shape_, std::move(p));
  }

  Operator matrix() const {
    Matrix m = Matrix::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) m(i, i) = double(eigs_[i]);
    return Operator(shape_, std::move(m));
  }

  // Largest eigenvalue difference; bounds the degree of any trigonometric
  // polynomial theta -> <i| U(theta) A U(theta)* |j>.
  long long max_gap() const {
    auto [lo, hi] = std::minmax_element(eigs_.begin(), eigs_.end());
    return *hi - *lo;
  }

 private:
  SpaceShape shape_;
  std::vector<long long> eigs_;
};

// Number operators of a system-reference pair and their composite
// N_T = N_S (x) 1 + 1 (x) N_R on the tensor space.
class CompositeNumber {
 public:
  CompositeNumber(NumberOperator system, NumberOperator reference)
      : system_(std::move(system)), reference_(std::move(reference)) {}

  const NumberOperator& system() const { return system_; }
  const NumberOperator& reference() const { return reference_; }

  NumberOperator total() const {
    const int ds = system_.dim(), dr = reference_.dim();
    std::vector<long long> e(static_cast<std::size_t>(ds) * dr);
    for (int i = 0; i < ds; ++i)
      for (int k = 0; k < dr; ++k)
        e[i * dr + k] = system_.eigenvalue(i) + reference_.eigenvalue(k);
    return NumberOperator(SpaceShape::pair(ds, dr), std::move(e));
  }

 private:
  NumberOperator system_;
  NumberOperator reference_;
};

//============================================================================
// Phase shifts and symmetrisation
//============================================================================

// U(theta) = e^{i N theta}: diagonal with entries e^{i n theta}.
inline Operator phase_shift(const NumberOperator& n, double theta) {
  const double t = wrap_angle(theta);
  Matrix u = Matrix::Zero(n.dim(), n.dim());
  for (int i = 0; i < n.dim(); ++i)
    u(i, i) = std::polar(1.0, double(n.eigenvalue(i)) * t);
  return Operator(n.shape(), std::move(u));
}

// Block-diagonal part of A with respect to the eigenspaces of n:
// A -> sum_n P_n A P_n. Idempotent and unital; its range is the commutant
// of the number operator.
inline Operator tau(const Operator& a, const NumberOperator& n) {
  require_same_shape(a.shape(), n.shape(), "tau");
  Matrix out = a.entries();
  for (int i = 0; i < n.dim(); ++i)
    for (int j = 0; j < n.dim(); ++j)
      if (n.eigenvalue(i) != n.eigenvalue(j)) out(i, j) = 0.0;
  return Operator(a.shape(), std::move(out));
}

// Predual of tau: same projector-sum form, trace preserving and positive,
// so the result is again a State.
inline State tau_star(const State& rho, const NumberOperator& n) {
  return State(tau(rho.density(), n));
}

// Symmetrisation with respect to the cyclic subgroup Z_modulus: the average
// of U(2 pi k / modulus) A U(2 pi k / modulus)* over one period, which keeps
// the matrix elements whose eigenvalue gap vanishes modulo the group order.
inline Operator tau_cyclic(const Operator& a, const NumberOperator& n,
                           long long modulus) {
  require_same_shape(a.shape(), n.shape(), "tau_cyclic");
  if (modulus < 1) throw ShapeError("tau_cyclic: modulus must be >= 1");
  Matrix out = a.entries();
  for (int i = 0; i < n.dim(); ++i) {
    for (int j = 0; j < n.dim(); ++j) {
      const long long gap = n.eigenvalue(i) - n.eigenvalue(j);
      if (((gap % modulus) + modulus) % modulus != 0) out(i, j) = 0.0;
    }
  }
  return Operator(a.shape(), std::move(out));
}

// Uniform-grid average of U(theta_k) A U(theta_k)* over theta_k = -pi + 2 pi
// k / K. The integrand entries are trigonometric monomials of degree
// |n_i - n_j| < K, which the grid integrates exactly, so the result equals
// tau(a, n) and is not an approximation.
inline Operator twirl(const Operator& a, const NumberOperator& n,
                      int quadrature_points) {
  require_same_shape(a.shape(), n.shape(), "twirl");
  if (quadrature_points <= n.max_gap()) {
    throw QuadratureError(
        "twirl: " + std::to_string(quadrature_points) +
        " points cannot integrate harmonics up to degree " +
        std::to_string(n.max_gap()) + "; need K > max eigenvalue gap");
  }
  const int k_points = quadrature_points;
  Matrix out = Matrix::Zero(n.dim(), n.dim());
  for (int k = 0; k < k_points; ++k) {
    const double theta = -kPi + 2.0 * kPi * k / k_points;
    for (int i = 0; i < n.dim(); ++i) {
      for (int j = 0; j < n.dim(); ++j) {
        const double gap = double(n.eigenvalue(i) - n.eigenvalue(j));
        out(i, j) += std::polar(1.0, gap * theta) * a.entries()(i, j);
      }
    }
  }
  return Operator(a.shape(), out / double(k_points));
}

// Max-entry magnitude of [A, N]; zero exactly when A is invariant under
// every phase shift U(theta).
inline double invariance_defect(const Operator& a, const NumberOperator& n) {
  require_same_shape(a.shape(), n.shape(), "invariance_defect");
  double worst = 0.0;
  for (int i = 0; i < n.dim(); ++i) {
    for (int j = 0; j < n.dim(); ++j) {
      const double gap = double(n.eigenvalue(j) - n.eigenvalue(i));
      worst = std::max(worst, std::abs(a.entries()(i, j)) * std::abs(gap));
    }
  }
  return worst;
}

}  // namespace relaframe

#endif  // RELAFRAME_SYMMETRY_HPP_
