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

#ifndef RELAFRAME_SUPEROPERATOR_HPP_
#define RELAFRAME_SUPEROPERATOR_HPP_

#include <functional>
#include <utility>

#include "relaframe/hilbert.hpp"

namespace relaframe {

// Linear map on operators, materialised as an explicit matrix acting on
// column-stacked vectorisations. Makes preduals, adjoints and Choi matrices
// mechanical; dimensions stay desk scale so the (out^2 x in^2) storage is
// cheap.
class SuperOperator {
 public:
  SuperOperator(SpaceShape in, SpaceShape out, Matrix action)
      : in_(std::move(in)), out_(std::move(out)), action_(std::move(action)) {
    const long want_rows = long(out_.total()) * out_.total();
    const long want_cols = long(in_.total()) * in_.total();
    if (action_.rows() != want_rows || action_.cols() != want_cols) {
      throw ShapeError("SuperOperator: action matrix has wrong size");
    }
  }

  // Build the action matrix by applying the map to every matrix unit E_ij.
  static SuperOperator materialise(
      const SpaceShape& in, const SpaceShape& out,
      const std::function<Matrix(const Matrix&)>& map) {
    const int din = in.total(), dout = out.total();
    Matrix action(long(dout) * dout, long(din) * din);
    Matrix unit = Matrix::Zero(din, din);
    for (int j = 0; j < din; ++j) {
      for (int i = 0; i < din; ++i) {
        unit(i, j) = 1.0;
        const Matrix image = map(unit);
        action.col(long(i) + long(j) * din) =
            Eigen::Map<const CVector>(image.data(), long(dout) * dout);
        unit(i, j) = 0.0;
      }
    }
    return SuperOperator(in, out, std::move(action));
  }

  static SuperOperator identity(const SpaceShape& shape) {
    const long n2 = long(shape.total()) * shape.total();
    return SuperOperator(shape, shape, Matrix::Identity(n2, n2));
  }

  const SpaceShape& input_shape() const { return in_; }
  const SpaceShape& output_shape() const { return out_; }
  const Matrix& action() const { return action_; }

  Matrix apply_matrix(const Matrix& a) const {
    const int din = in_.total(), dout = out_.total();
    if (a.rows() != din || a.cols() != din) {
      throw ShapeError("SuperOperator::apply: operand has wrong dimension");
    }
    CVector v = action_ * Eigen::Map<const CVector>(a.data(), long(din) * din);
    return Eigen::Map<const Matrix>(v.data(), dout, dout);
  }

  Operator apply(const Operator& a) const {
    require_same_shape(a.shape(), in_, "SuperOperator::apply");
    return Operator(out_, apply_matrix(a.entries()));
  }

  // this after inner: (this o inner)(A) = this(inner(A)).
  SuperOperator compose_after(const SuperOperator& inner) const {
    require_same_shape(inner.out_, in_, "SuperOperator::compose_after");
    return SuperOperator(inner.in_, out_, action_ * inner.action_);
  }

  // The map Z with tr[this(A) B] = tr[A Z(B)]: the predual of an observable
  // map, or the dual of a state map. In vectorised form Z = T_in Y^T T_out
  // with T the transposition permutation.
  SuperOperator trace_pairing_transpose() const {
    Matrix z = transposition(in_.total()) * action_.transpose() *
               transposition(out_.total());
    return SuperOperator(out_, in_, std::move(z));
  }

  // Choi matrix sum_ij E_ij (x) Phi(E_ij) on in (x) out, assembled by
  // applying the map to one tensor factor of the (unnormalised) maximally
  // entangled state.
  Matrix choi() const {
    const int din = in_.total(), dout = out_.total();
    Matrix c = Matrix::Zero(long(din) * dout, long(din) * dout);
    for (int i = 0; i < din; ++i) {
      for (int j = 0; j < din; ++j) {
        const CVector col = action_.col(long(i) + long(j) * din);
        const Eigen::Map<const Matrix> image(col.data(), dout, dout);
        c.block(long(i) * dout, long(j) * dout, dout, dout) = image;
      }
    }
    return c;
  }

 private:
  static Matrix transposition(int d) {
    Matrix t = Matrix::Zero(long(d) * d, long(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t(long(i) + long(j) * d, long(j) + long(i) * d) = 1.0;
    return t;
  }

  SpaceShape in_;
  SpaceShape out_;
  Matrix action_;
};

struct CpReport {
  // Minimal eigenvalue of the (symmetrised) Choi matrix; the map is
  // completely positive exactly when this is >= 0 up to tolerance.
  double choi_min_eigenvalue = 0.0;
  // max_ij | tr[Phi(E_ij)] - delta_ij |.
  double trace_defect = 0.0;
};

inline CpReport choi_cp_check(const SuperOperator& map) {
  const int din = map.input_shape().total();
  const int dout = map.output_shape().total();

  double trace_defect = 0.0;
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      const CVector col = map.action().col(long(i) + long(j) * din);
      Complex tr = 0.0;
      for (int a = 0; a < dout; ++a) tr += col(long(a) + long(a) * dout);
      const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
      trace_defect = std::max(trace_defect, std::abs(tr - want));
    }
  }

  Matrix c = map.choi();
  Matrix h = 0.5 * (c + c.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return CpReport{es.eigenvalues().minCoeff(), trace_defect};
}

}  // namespace relaframe

#endif  // RELAFRAME_SUPEROPERATOR_HPP_
