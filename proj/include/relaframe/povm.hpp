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

#ifndef RELAFRAME_POVM_HPP_
#define RELAFRAME_POVM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "relaframe/hilbert.hpp"
#include "relaframe/symmetry.hpp"

namespace relaframe {

//============================================================================
// ArcPartition
//============================================================================

// Partition of the circle into K equal half-open arcs
// X_k = [-pi + 2 pi k / K, -pi + 2 pi (k+1) / K), k = 0..K-1.
class ArcPartition {
 public:
  explicit ArcPartition(int bins) : bins_(bins) {
    if (bins_ < 1) throw ShapeError("ArcPartition: need at least one arc");
  }

  int bins() const { return bins_; }
  double width() const { return 2.0 * kPi / bins_; }
  double lower(int k) const { return -kPi + width() * k; }
  double upper(int k) const { return -kPi + width() * (k + 1); }
  double midpoint(int k) const { return -kPi + width() * (k + 0.5); }

  // Arc containing theta; the identified endpoints +-pi both map to arc 0.
  int bin_containing(double theta) const {
    double t = wrap_angle(theta);
    if (t >= kPi) t = -kPi;
    int k = static_cast<int>(std::floor((t + kPi) / width()));
    if (k < 0) k = 0;
    if (k >= bins_) k = bins_ - 1;
    return k;
  }

  int shifted(int k, int steps) const {
    int m = (k + steps) % bins_;
    return m < 0 ? m + bins_ : m;
  }

 private:
  int bins_;
};

//============================================================================
// PhasePOVM
//============================================================================

enum class PovmKind {
  canonical_binned,  // binned canonical phase, closed-form kernel entries
  cyclic_sharp,      // discrete Fourier projections, projection valued
  custom,
};

inline const char* to_string(PovmKind kind) {
  switch (kind) {
    case PovmKind::canonical_binned: return "canonical-binned";
    case PovmKind::cyclic_sharp: return "cyclic-sharp";
    case PovmKind::custom: return "custom";
  }
  return "?";
}

// Finite partition of the circle with one effect per arc. Each effect also
// carries an evaluation angle: the arc midpoint for binned constructions,
// the exact atom angle for the cyclic projections.
class PhasePOVM {
 public:
  PhasePOVM(int dimension, ArcPartition partition, std::vector<Matrix> effects,
            std::vector<double> angles, PovmKind kind)
      : dim_(dimension),
        partition_(partition),
        effects_(std::move(effects)),
        angles_(std::move(angles)),
        kind_(kind) {
    if (static_cast<int>(effects_.size()) != partition_.bins() ||
        effects_.size() != angles_.size()) {
      throw ShapeError("PhasePOVM: one effect and one angle per arc required");
    }
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (std::size_t k = 0; k < effects_.size(); ++k) {
      const Matrix& e = effects_[k];
      if (e.rows() != dim_ || e.cols() != dim_) {
        throw ShapeError("PhasePOVM: effect " + std::to_string(k) +
                         " has wrong dimension");
      }
      if (max_abs(e - e.adjoint()) > tolerance::hermitian) {
        throw InvariantError("PhasePOVM: effect " + std::to_string(k) +
                             " is not hermitian");
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(e, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < -tolerance::psd ||
          es.eigenvalues().maxCoeff() > 1.0 + tolerance::psd) {
        throw InvariantError("PhasePOVM: effect " + std::to_string(k) +
                             " violates 0 <= E <= 1");
      }
      sum += e;
    }
    if (max_abs(sum - Matrix::Identity(dim_, dim_)) > tolerance::resolution) {
      throw InvariantError("PhasePOVM: effects do not sum to identity");
    }
  }

  int dim() const { return dim_; }
  SpaceShape shape() const { return SpaceShape::single(dim_); }
  const ArcPartition& partition() const { return partition_; }
  int bins() const { return partition_.bins(); }
  const Matrix& effect(int k) const { return effects_[k]; }
  Operator effect_operator(int k) const {
    return Operator(shape(), effects_[k]);
  }
  double angle(int k) const { return angles_[k]; }
  PovmKind kind() const { return kind_; }

 private:
  int dim_;
  ArcPartition partition_;
  std::vector<Matrix> effects_;
  std::vector<double> angles_;
  PovmKind kind_;
};

// A number operator together with a phase POVM covariant under it.
struct NumberPhasePair {
  NumberOperator number;
  PhasePOVM phase;
};

//============================================================================
// Constructors
//============================================================================

// Density of the canonical phase measure: 2 pi dF/dtheta has matrix entries
// e^{i (r - s) theta}; a rank-one positive kernel. The sign is the one that
// makes U(theta) F(X) U(theta)* = F(X + theta) hold with U(theta) =
// e^{+i N theta}.
inline Matrix phase_kernel(int dim, double theta) {
  Matrix d(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int s = 0; s < dim; ++s) d(r, s) = std::polar(1.0, (r - s) * theta);
  return d;
}

// Binned canonical phase: F(X_k) = (1/2pi) integral over X_k of the kernel,
// in closed form per entry. Diagonal entries are 1/K; the off-diagonal
// (r, s) entry is (e^{i q b} - e^{i q a}) / (2 pi i q) with q = r - s over
// the arc [a, b).
inline PhasePOVM canonical_phase(int dim, int bin_count) {
  if (dim < 1) throw ShapeError("canonical_phase: dim must be >= 1");
  ArcPartition part(bin_count);
  std::vector<Matrix> effects;
  std::vector<double> angles;
  effects.reserve(bin_count);
  for (int k = 0; k < bin_count; ++k) {
    const double a = part.lower(k), b = part.upper(k);
    Matrix e(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int s = 0; s < dim; ++s) {
        const int q = r - s;
        if (q == 0) {
          e(r, s) = (b - a) / (2.0 * kPi);
        } else {
          const Complex num =
              std::polar(1.0, q * b) - std::polar(1.0, q * a);
          e(r, s) = num / (Complex(0.0, 2.0 * kPi) * double(q));
        }
      }
    }
    effects.push_back(std::move(e));
    angles.push_back(part.midpoint(k));
  }
  return PhasePOVM(dim, part, std::move(effects), std::move(angles),
                   PovmKind::canonical_binned);
}

// Discrete Fourier basis vector f_k = (1/sqrt d) sum_n e^{i n k 2 pi / d} |n>.
inline Vector fourier_vector(int dim, int k) {
  CVector v(dim);
  for (int n = 0; n < dim; ++n)
    v(n) = std::polar(1.0 / std::sqrt(double(dim)), 2.0 * kPi * n * k / dim);
  return Vector(SpaceShape::single(dim), std::move(v));
}

// Sharp angle observable of the cyclic model: d mutually orthogonal rank-one
// projections onto the Fourier vectors, each placed in the arc containing
// its angle 2 pi k / d (wrapped). Shifting by one arc width permutes the
// projections cyclically, so covariance is exact. For even d the angles sit
// exactly on arc boundaries, so the slot is computed in integer arithmetic:
// the arc containing wrap(2 pi k / d) is (k + floor(d/2)) mod d.
inline PhasePOVM cyclic_angle_pvm(int dim) {
  if (dim < 1) throw ShapeError("cyclic_angle_pvm: dim must be >= 1");
  ArcPartition part(dim);
  std::vector<Matrix> effects(dim, Matrix());
  std::vector<double> angles(dim, 0.0);
  for (int k = 0; k < dim; ++k) {
    const int slot = (k + dim / 2) % dim;
    effects[slot] = fourier_vector(dim, k).projector().entries();
    angles[slot] = wrap_angle(2.0 * kPi * k / dim);
  }
  return PhasePOVM(dim, part, std::move(effects), std::move(angles),
                   PovmKind::cyclic_sharp);
}

// Sharp angle operator sum_k angle_k P_k of a cyclic PVM.
inline Operator angle_operator(const PhasePOVM& povm) {
  if (povm.kind() != PovmKind::cyclic_sharp) {
    throw ShapeError("angle_operator: requires a cyclic-sharp PVM");
  }
  Matrix m = Matrix::Zero(povm.dim(), povm.dim());
  for (int k = 0; k < povm.bins(); ++k) m += povm.angle(k) * povm.effect(k);
  return Operator(povm.shape(), std::move(m));
}

//============================================================================
// Diagnostics
//============================================================================

// Max over bin-width shifts and arcs of
// || U(theta) F(X_k) U(theta)* - F(X_k + theta) ||_maxentry. Shifts are
// restricted to multiples of the arc width so that X_k + theta is again an
// arc of the partition.
inline double covariance_defect(const NumberPhasePair& pair) {
  const PhasePOVM& f = pair.phase;
  const NumberOperator& n = pair.number;
  require_same_shape(f.shape(), n.shape(), "covariance_defect");
  const int bins = f.bins();
  const double w = f.partition().width();
  double worst = 0.0;
  for (int m = 0; m < bins; ++m) {
    const double theta = m * w;
    for (int k = 0; k < bins; ++k) {
      const Matrix& e = f.effect(k);
      const Matrix& shifted = f.effect(f.partition().shifted(k, m));
      for (int r = 0; r < f.dim(); ++r) {
        for (int s = 0; s < f.dim(); ++s) {
          const double gap = double(n.eigenvalue(r) - n.eigenvalue(s));
          const Complex rotated = std::polar(1.0, gap * theta) * e(r, s);
          worst = std::max(worst, std::abs(rotated - shifted(r, s)));
        }
      }
    }
  }
  return worst;
}

// Largest eigenvalue of the summed effects of the selected bins. Equals 1
// exactly for the full circle or for any single projection of the cyclic
// model; for the truncated canonical phase it approaches 1 from below as
// the dimension grows.
inline double norm1_diagnostic(const PhasePOVM& povm,
                               const std::vector<int>& bins) {
  if (bins.empty()) {
    throw EmptySelectionError("norm1_diagnostic: empty bin selection");
  }
  Matrix sum = Matrix::Zero(povm.dim(), povm.dim());
  for (int k : bins) {
    if (k < 0 || k >= povm.bins()) {
      throw ShapeError("norm1_diagnostic: bin index out of range");
    }
    sum += povm.effect(k);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sum, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Outcome distribution p_k = tr[omega F(X_k)].
inline std::vector<double> measure_of_state(const PhasePOVM& povm,
                                            const State& omega) {
  require_same_shape(povm.shape(), omega.shape(), "measure_of_state");
  std::vector<double> p(povm.bins());
  for (int k = 0; k < povm.bins(); ++k) {
    p[k] = (omega.entries() * povm.effect(k)).trace().real();
  }
  return p;
}

}  // namespace relaframe

#endif  // RELAFRAME_POVM_HPP_
