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

#ifndef RELAFRAME_HILBERT_HPP_
#define RELAFRAME_HILBERT_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "relaframe/errors.hpp"

namespace relaframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default tolerances. Calibrated for double precision at dimensions <= 256;
// state and effect validation happens once at construction, operations then
// assume validated inputs.
namespace tolerance {
inline constexpr double psd = 1e-10;        // smallest admissible eigenvalue
inline constexpr double trace = 1e-10;      // |tr - 1| for states
inline constexpr double hermitian = 1e-10;  // max-entry |M - M^dagger|
inline constexpr double unit_norm = 1e-10;  // | ||v|| - 1 | for vectors
inline constexpr double resolution = 1e-12; // effects summing to identity
}  // namespace tolerance

inline constexpr double kPi = std::numbers::pi;

// Wraps an angle to the principal interval (-pi, pi].
inline double wrap_angle(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);  // (-pi, pi] up to sign of pi
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

//============================================================================
// SpaceShape
//============================================================================

// Ordered list of tensor factor dimensions. One entry: a single system.
// Two entries: a system (first) and reference (second) composite, flattened
// row-major with the system index major.
class SpaceShape {
 public:
  explicit SpaceShape(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ShapeError("SpaceShape: no factors");
    for (int d : factors_) {
      if (d < 1) throw ShapeError("SpaceShape: factor dimension must be >= 1");
    }
  }

  static SpaceShape single(int d) { return SpaceShape({d}); }
  static SpaceShape pair(int d_system, int d_reference) {
    return SpaceShape({d_system, d_reference});
  }

  const std::vector<int>& factors() const { return factors_; }
  int factor(std::size_t i) const { return factors_.at(i); }
  std::size_t factor_count() const { return factors_.size(); }
  bool is_single() const { return factors_.size() == 1; }
  bool is_bipartite() const { return factors_.size() == 2; }

  int total() const {
    int n = 1;
    for (int d : factors_) n *= d;
    return n;
  }

  // Concatenation of factor lists, as produced by tensor().
  SpaceShape joined_with(const SpaceShape& other) const {
    std::vector<int> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return SpaceShape(std::move(f));
  }

  friend bool operator==(const SpaceShape& a, const SpaceShape& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const SpaceShape& a, const SpaceShape& b) {
    return !(a == b);
  }

  std::string describe() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(factors_[i]);
    }
    return s;
  }

 private:
  std::vector<int> factors_;
};

inline void require_same_shape(const SpaceShape& a, const SpaceShape& b,
                               const char* where) {
  if (a != b) {
    throw ShapeError(std::string(where) + ": shape mismatch " + a.describe() +
                     " vs " + b.describe());
  }
}

//============================================================================
// Operator
//============================================================================

// A dense complex square matrix tagged with the Hilbert-space shape it acts
// on. The universal carrier of observables, effects and unitaries.
class Operator {
 public:
  Operator(SpaceShape shape, Matrix entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.total();
    if (entries_.rows() != n || entries_.cols() != n) {
      throw ShapeError("Operator: matrix is " + std::to_string(entries_.rows()) +
                       "x" + std::to_string(entries_.cols()) +
                       " but shape " + shape_.describe() + " needs " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }

  static Operator identity(const SpaceShape& shape) {
    return Operator(shape, Matrix::Identity(shape.total(), shape.total()));
  }
  static Operator zero(const SpaceShape& shape) {
    return Operator(shape, Matrix::Zero(shape.total(), shape.total()));
  }

  const SpaceShape& shape() const { return shape_; }
  const Matrix& entries() const { return entries_; }
  int dim() const { return shape_.total(); }

  Operator adjoint() const { return Operator(shape_, entries_.adjoint()); }
  Complex trace() const { return entries_.trace(); }

  double hermiticity_defect() const {
    return max_abs(entries_ - entries_.adjoint());
  }
  bool is_hermitian(double tol = tolerance::hermitian) const {
    return hermiticity_defect() <= tol;
  }

  friend Operator operator+(const Operator& a, const Operator& b) {
    require_same_shape(a.shape_, b.shape_, "operator+");
    return Operator(a.shape_, a.entries_ + b.entries_);
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    require_same_shape(a.shape_, b.shape_, "operator-");
    return Operator(a.shape_, a.entries_ - b.entries_);
  }
  friend Operator operator*(const Operator& a, const Operator& b) {
    require_same_shape(a.shape_, b.shape_, "operator*");
    return Operator(a.shape_, a.entries_ * b.entries_);
  }
  friend Operator operator*(Complex c, const Operator& a) {
    return Operator(a.shape_, c * a.entries_);
  }
  Operator operator-() const { return Operator(shape_, -entries_); }

 private:
  SpaceShape shape_;
  Matrix entries_;
};

// Max-entry distance between two operators of the same shape.
inline double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_shape(a.shape(), b.shape(), "max_abs_diff");
  return max_abs(a.entries() - b.entries());
}

//============================================================================
// Vector
//============================================================================

// A unit vector in the space described by its shape.
class Vector {
 public:
  Vector(SpaceShape shape, CVector amplitudes)
      : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != shape_.total()) {
      throw ShapeError("Vector: length " + std::to_string(amplitudes_.size()) +
                       " does not match shape " + shape_.describe());
    }
    if (std::abs(amplitudes_.norm() - 1.0) > tolerance::unit_norm) {
      throw InvariantError("Vector: not unit norm (|v| = " +
                           std::to_string(amplitudes_.norm()) + ")");
    }
  }

  // |index> in the canonical basis of the given shape.
  static Vector basis(const SpaceShape& shape, int index) {
    if (index < 0 || index >= shape.total()) {
      throw ShapeError("Vector::basis: index " + std::to_string(index) +
                       " outside dimension " + std::to_string(shape.total()));
    }
    CVector v = CVector::Zero(shape.total());
    v(index) = 1.0;
    return Vector(shape, std::move(v));
  }

  const SpaceShape& shape() const { return shape_; }
  const CVector& amplitudes() const { return amplitudes_; }
  int dim() const { return shape_.total(); }

  // P[phi] = |phi><phi|
  Operator projector() const {
    return Operator(shape_, amplitudes_ * amplitudes_.adjoint());
  }

 private:
  SpaceShape shape_;
  CVector amplitudes_;
};

//============================================================================
// State
//============================================================================

// Positive unit-trace operator. Validation (hermiticity, positivity, trace)
// runs once here; everything downstream assumes a valid state.
class State {
 public:
  explicit State(Operator op) : op_(std::move(op)) {
    const double herm = op_.hermiticity_defect();
    if (herm > tolerance::hermitian) {
      throw InvariantError("State: not hermitian (defect " +
                           std::to_string(herm) + ")");
    }
    if (std::abs(op_.trace().real() - 1.0) > tolerance::trace ||
        std::abs(op_.trace().imag()) > tolerance::trace) {
      throw InvariantError("State: trace != 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(op_.entries(),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tolerance::psd) {
      throw InvariantError("State: negative eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()));
    }
  }

  static State pure(const Vector& phi) { return State(phi.projector()); }
  static State maximally_mixed(const SpaceShape& shape) {
    const int n = shape.total();
    return State(Operator(shape, Matrix::Identity(n, n) / double(n)));
  }

  const Operator& density() const { return op_; }
  const SpaceShape& shape() const { return op_.shape(); }
  const Matrix& entries() const { return op_.entries(); }
  int dim() const { return op_.dim(); }

 private:
  Operator op_;
};

//============================================================================
// Tensor products and partial traces
//============================================================================

// Kronecker product in (system, reference) order: the composite basis index
// (i, k) is flattened as i * dim(b) + k.
inline Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
    }
  }
  return Operator(a.shape().joined_with(b.shape()), std::move(out));
}

inline Vector tensor(const Vector& a, const Vector& b) {
  const int da = a.dim(), db = b.dim();
  CVector out(da * db);
  for (int i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return Vector(a.shape().joined_with(b.shape()), std::move(out));
}

// Trace over the second (reference) factor of a bipartite operator:
// T[i,j] = sum_k C[(i,k),(j,k)].
inline Operator partial_trace_reference(const Operator& c) {
  if (!c.shape().is_bipartite()) {
    throw ShapeError("partial_trace_reference: operator is not bipartite (" +
                     c.shape().describe() + ")");
  }
  const int ds = c.shape().factor(0), dr = c.shape().factor(1);
  Matrix out = Matrix::Zero(ds, ds);
  for (int i = 0; i < ds; ++i) {
    for (int j = 0; j < ds; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < dr; ++k) s += c.entries()(i * dr + k, j * dr + k);
      out(i, j) = s;
    }
  }
  return Operator(SpaceShape::single(ds), std::move(out));
}

// Trace over the first (system) factor.
inline Operator partial_trace_system(const Operator& c) {
  if (!c.shape().is_bipartite()) {
    throw ShapeError("partial_trace_system: operator is not bipartite (" +
                     c.shape().describe() + ")");
  }
  const int ds = c.shape().factor(0), dr = c.shape().factor(1);
  Matrix out = Matrix::Zero(dr, dr);
  for (int k = 0; k < dr; ++k) {
    for (int l = 0; l < dr; ++l) {
      Complex s = 0.0;
      for (int i = 0; i < ds; ++i) s += c.entries()(i * dr + k, i * dr + l);
      out(k, l) = s;
    }
  }
  return Operator(SpaceShape::single(dr), std::move(out));
}

//============================================================================
// Distances and pairings
//============================================================================

// (1/2) ||rho - sigma||_1 via the singular values of the difference.
// Always in [0, 1] for states.
inline double trace_distance(const State& rho, const State& sigma) {
  require_same_shape(rho.shape(), sigma.shape(), "trace_distance");
  Eigen::JacobiSVD<Matrix> svd(rho.entries() - sigma.entries());
  return 0.5 * svd.singularValues().sum();
}

// tr[rho A]; real up to rounding whenever A is hermitian.
inline Complex expectation(const State& rho, const Operator& a) {
  require_same_shape(rho.shape(), a.shape(), "expectation");
  return (rho.entries() * a.entries()).trace();
}

//============================================================================
// Coherent states on a truncated ladder
//============================================================================

struct CoherentState {
  Vector state;
  // Probability mass dropped by truncating at n = dim - 1, before
  // renormalisation: 1 - e^{-|beta|^2} sum_{n<dim} |beta|^{2n} / n!.
  double truncation_weight = 0.0;
};

// Amplitudes proportional to beta^n / sqrt(n!) for n = 0..dim-1, then
// renormalised. The dropped tail weight is always reported; in strict mode
// exceeding the bound raises TruncationError instead.
inline CoherentState coherent_state(Complex beta, int dim,
                                    double weight_bound = 1e-6,
                                    bool strict = false) {
  if (dim < 1) throw ShapeError("coherent_state: dim must be >= 1");

  CVector amps(dim);
  Complex c = 1.0;
  amps(0) = c;
  for (int n = 1; n < dim; ++n) {
    c *= beta / std::sqrt(double(n));
    amps(n) = c;
  }

  // Kept Poisson(|beta|^2) mass, accumulated term by term.
  const double lam = std::norm(beta);
  double term = std::exp(-lam), kept = term;
  for (int n = 1; n < dim; ++n) {
    term *= lam / double(n);
    kept += term;
  }
  double weight = 1.0 - kept;
  if (weight < 0.0) weight = 0.0;

  if (strict && weight > weight_bound) {
    throw TruncationError("coherent_state: truncation weight " +
                          std::to_string(weight) + " exceeds bound " +
                          std::to_string(weight_bound));
  }

  amps /= amps.norm();
  return CoherentState{Vector(SpaceShape::single(dim), std::move(amps)),
                       weight};
}

}  // namespace relaframe

#endif  // RELAFRAME_HILBERT_HPP_
