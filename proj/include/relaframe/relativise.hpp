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

#ifndef RELAFRAME_RELATIVISE_HPP_
#define RELAFRAME_RELATIVISE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "relaframe/hilbert.hpp"
#include "relaframe/povm.hpp"
#include "relaframe/superoperator.hpp"
#include "relaframe/symmetry.hpp"

namespace relaframe {

//============================================================================
// RelativisationContext
//============================================================================

// Ingredients of the relativising map: a number operator on the system and a
// covariant (number, phase POVM) pair on the reference.
class RelativisationContext {
 public:
  RelativisationContext(NumberOperator system_number,
                        NumberPhasePair reference)
      : system_number_(std::move(system_number)),
        reference_(std::move(reference)) {
    const double defect = covariance_defect(reference_);
    if (defect > 1e-10) {
      throw InvariantError(
          "RelativisationContext: reference POVM covariance defect " +
          std::to_string(defect));
    }
  }

  const NumberOperator& system_number() const { return system_number_; }
  const NumberPhasePair& reference() const { return reference_; }
  const PhasePOVM& reference_povm() const { return reference_.phase; }

  int system_dim() const { return system_number_.dim(); }
  int reference_dim() const { return reference_.phase.dim(); }
  SpaceShape system_shape() const { return system_number_.shape(); }
  SpaceShape composite_shape() const {
    return SpaceShape::pair(system_dim(), reference_dim());
  }

  NumberOperator composite_number() const {
    return CompositeNumber(system_number_, reference_.number).total();
  }

  // Symmetrisation matching the model's group: the full U(1) projection for
  // binned canonical references, the Z_{d_R} average for the cyclic sharp
  // model (whose relativised observables are invariant modulo d_R only).
  Operator symmetrise_composite(const Operator& c) const {
    const NumberOperator n_t = composite_number();
    if (reference_.phase.kind() == PovmKind::cyclic_sharp) {
      return tau_cyclic(c, n_t, reference_dim());
    }
    return tau(c, n_t);
  }

  // Grid size that integrates every trigonometric monomial arising in the
  // relativised products exactly: 2 gap(N_S) + gap(N_R) + 1.
  int exact_grid_points() const {
    return int(2 * system_number_.max_gap() + reference_.number.max_gap() + 1);
  }

 private:
  NumberOperator system_number_;
  NumberPhasePair reference_;
};

namespace detail {

// e^{i nu_i theta} A[i,j] e^{-i nu_j theta}, i.e. U(theta) A U(theta)* for
// the diagonal phase representation. O(d^2), no matrix products.
inline Matrix rotate(const Matrix& a, const NumberOperator& n, double theta) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const double gap = double(n.eigenvalue(i) - n.eigenvalue(j));
      out(i, j) = std::polar(1.0, gap * theta) * a(i, j);
    }
  }
  return out;
}

// Tr_R[(1 (x) B) sigma][m,n] = sum_{s,t} B[s,t] sigma[(m,t),(n,s)].
inline Matrix weighted_partial_trace_reference(const Matrix& sigma,
                                               const Matrix& b, int ds,
                                               int dr) {
  Matrix out = Matrix::Zero(ds, ds);
  for (int m = 0; m < ds; ++m) {
    for (int n = 0; n < ds; ++n) {
      Complex acc = 0.0;
      for (int s = 0; s < dr; ++s) {
        for (int t = 0; t < dr; ++t) {
          acc += b(s, t) * sigma(m * dr + t, n * dr + s);
        }
      }
      out(m, n) = acc;
    }
  }
  return out;
}

// Midpoints of a uniform P-point partition of the circle.
inline double grid_angle(int j, int points) {
  return -kPi + 2.0 * kPi * (j + 0.5) / points;
}

}  // namespace detail

//============================================================================
// The relativising map
//============================================================================

// Discrete-measure evaluation: sum_k U_S(angle_k) A U_S(angle_k)* (x) E_k,
// each effect taken at its evaluation angle. This is the defining integral
// for the cyclic model (its measure is atomic) and a midpoint approximation
// for binned POVMs, where averaging the kernel over each arc attenuates
// off-diagonal harmonics.
inline Operator yen_povm_sum(const RelativisationContext& ctx,
                             const Operator& a) {
  require_same_shape(a.shape(), ctx.system_shape(), "yen_povm_sum");
  const PhasePOVM& f = ctx.reference_povm();
  Operator acc = Operator::zero(ctx.composite_shape());
  for (int k = 0; k < f.bins(); ++k) {
    const Matrix rotated =
        detail::rotate(a.entries(), ctx.system_number(), f.angle(k));
    acc = acc + tensor(Operator(ctx.system_shape(), rotated),
                       Operator(f.shape(), f.effect(k)));
  }
  return acc;
}

// Exact closed form for the canonical kernel: integrating
// e^{i (nu_n - nu_m) theta} against the kernel entry e^{i (r - s) theta}
// over the full circle leaves A[n,m] exactly on the matrix elements obeying
// the selection rule nu_n - nu_m = s - r, and zero elsewhere. No quadrature
// enters; the bin structure of the POVM drops out.
inline Operator yen_closed_form(const RelativisationContext& ctx,
                                const Operator& a) {
  require_same_shape(a.shape(), ctx.system_shape(), "yen_closed_form");
  if (ctx.reference_povm().kind() != PovmKind::canonical_binned) {
    throw ShapeError("yen_closed_form: requires the canonical phase POVM");
  }
  const int ds = ctx.system_dim(), dr = ctx.reference_dim();
  const NumberOperator& num = ctx.system_number();
  Matrix out = Matrix::Zero(ds * dr, ds * dr);
  for (int n = 0; n < ds; ++n) {
    for (int m = 0; m < ds; ++m) {
      const long long gap = num.eigenvalue(n) - num.eigenvalue(m);
      for (int r = 0; r < dr; ++r) {
        const long long s = r + gap;
        if (s < 0 || s >= dr) continue;
        out(n * dr + r, m * dr + int(s)) = a.entries()(n, m);
      }
    }
  }
  return Operator(ctx.composite_shape(), std::move(out));
}

// Uniform-grid quadrature of the canonical integral, evaluating the kernel
// density at the grid angles. Exact (equal to the closed form) because every
// matrix element of the integrand is a trigonometric polynomial of degree
// below the enforced grid size.
inline Operator yen_quadrature(const RelativisationContext& ctx,
                               const Operator& a, int points) {
  require_same_shape(a.shape(), ctx.system_shape(), "yen_quadrature");
  if (ctx.reference_povm().kind() != PovmKind::canonical_binned) {
    throw ShapeError("yen_quadrature: requires the canonical phase POVM");
  }
  if (points < ctx.exact_grid_points()) {
    throw QuadratureError("yen_quadrature: " + std::to_string(points) +
                          " grid points < required " +
                          std::to_string(ctx.exact_grid_points()));
  }
  const int dr = ctx.reference_dim();
  Operator acc = Operator::zero(ctx.composite_shape());
  for (int j = 0; j < points; ++j) {
    const double theta = detail::grid_angle(j, points);
    const Matrix rotated =
        detail::rotate(a.entries(), ctx.system_number(), theta);
    acc = acc + tensor(Operator(ctx.system_shape(), rotated),
                       Operator(SpaceShape::single(dr),
                                (phase_kernel(dr, theta) / double(points)).eval()));
  }
  return acc;
}

// yen(A): the invariant composite observable representing the absolute A.
// Evaluated exactly: closed form for the canonical model, atomic sum for the
// cyclic model. Custom POVMs fall back to the midpoint sum.
inline Operator yen(const RelativisationContext& ctx, const Operator& a) {
  switch (ctx.reference_povm().kind()) {
    case PovmKind::canonical_binned:
      return yen_closed_form(ctx, a);
    case PovmKind::cyclic_sharp:
    case PovmKind::custom:
      return yen_povm_sum(ctx, a);
  }
  throw ShapeError("yen: unknown POVM kind");
}

//============================================================================
// Preduals
//============================================================================

namespace detail {

// Linear action of the predual map on an arbitrary composite matrix:
// sigma -> sum U(theta)* Tr_R[(1 (x) measure density) sigma] U(theta),
// with the measure evaluated exactly per model.
inline Matrix yen_star_action(const RelativisationContext& ctx,
                              const Matrix& sigma) {
  const int ds = ctx.system_dim(), dr = ctx.reference_dim();
  Matrix out = Matrix::Zero(ds, ds);
  const PhasePOVM& f = ctx.reference_povm();
  if (f.kind() == PovmKind::canonical_binned) {
    const int points = ctx.exact_grid_points();
    for (int j = 0; j < points; ++j) {
      const double theta = grid_angle(j, points);
      const Matrix reduced = weighted_partial_trace_reference(
          sigma, (phase_kernel(dr, theta) / double(points)).eval(), ds, dr);
      out += rotate(reduced, ctx.system_number(), -theta);
    }
  } else {
    for (int k = 0; k < f.bins(); ++k) {
      const Matrix reduced =
          weighted_partial_trace_reference(sigma, f.effect(k), ds, dr);
      out += rotate(reduced, ctx.system_number(), -f.angle(k));
    }
  }
  return out;
}

}  // namespace detail

// Predual on product states: sum U(theta)* rho_S U(theta) tr[rho_R F(d
// theta)], a mixture of phase-shifted copies of rho_S weighted by the
// reference phase distribution.
inline State yen_star_product(const RelativisationContext& ctx,
                              const State& rho_s, const State& rho_r) {
  require_same_shape(rho_s.shape(), ctx.system_shape(), "yen_star_product");
  require_same_shape(rho_r.shape(), ctx.reference_povm().shape(),
                     "yen_star_product");
  const PhasePOVM& f = ctx.reference_povm();
  Matrix out = Matrix::Zero(ctx.system_dim(), ctx.system_dim());
  if (f.kind() == PovmKind::canonical_binned) {
    const int points = ctx.exact_grid_points();
    for (int j = 0; j < points; ++j) {
      const double theta = detail::grid_angle(j, points);
      const double mu =
          (rho_r.entries() * phase_kernel(ctx.reference_dim(), theta))
              .trace()
              .real() /
          points;
      out += mu * detail::rotate(rho_s.entries(), ctx.system_number(), -theta);
    }
  } else {
    for (int k = 0; k < f.bins(); ++k) {
      const double mu = (rho_r.entries() * f.effect(k)).trace().real();
      out += mu * detail::rotate(rho_s.entries(), ctx.system_number(),
                                 -f.angle(k));
    }
  }
  return State(Operator(ctx.system_shape(), std::move(out)));
}

// Predual on arbitrary composite states, the linear extension of
// yen_star_product. "Derelativises" an invariant composite state back to a
// system description.
inline State yen_star(const RelativisationContext& ctx, const State& rho_t) {
  require_same_shape(rho_t.shape(), ctx.composite_shape(), "yen_star");
  return State(Operator(ctx.system_shape(),
                        detail::yen_star_action(ctx, rho_t.entries())));
}

//============================================================================
// Restriction
//============================================================================

// Gamma_omega(C) = Tr_R[(1 (x) omega) C]; on product operators
// Gamma_omega(A (x) B) = A tr[omega B]. Unital and positive: the dual of the
// embedding rho -> rho (x) omega.
inline Operator gamma_restrict(const State& omega, const Operator& c) {
  if (!c.shape().is_bipartite()) {
    throw ShapeError("gamma_restrict: composite operand is not bipartite");
  }
  const int ds = c.shape().factor(0), dr = c.shape().factor(1);
  if (omega.dim() != dr) {
    throw ShapeError("gamma_restrict: reference state dimension " +
                     std::to_string(omega.dim()) + " != factor " +
                     std::to_string(dr));
  }
  return Operator(SpaceShape::single(ds),
                  detail::weighted_partial_trace_reference(
                      c.entries(), omega.entries(), ds, dr));
}

// (Gamma_omega o yen)(A) = sum U(theta) A U(theta)* mu(theta) with
// mu the phase distribution of omega. Evaluated with the same exact
// discretisation as yen, so it coincides with gamma_restrict(omega, yen(A))
// to rounding.
inline Operator gamma_yen(const RelativisationContext& ctx, const State& omega,
                          const Operator& a) {
  require_same_shape(a.shape(), ctx.system_shape(), "gamma_yen");
  require_same_shape(omega.shape(), ctx.reference_povm().shape(), "gamma_yen");
  const PhasePOVM& f = ctx.reference_povm();
  Matrix out = Matrix::Zero(ctx.system_dim(), ctx.system_dim());
  if (f.kind() == PovmKind::canonical_binned) {
    const int points = ctx.exact_grid_points();
    for (int j = 0; j < points; ++j) {
      const double theta = detail::grid_angle(j, points);
      const double mu =
          (omega.entries() * phase_kernel(ctx.reference_dim(), theta))
              .trace()
              .real() /
          points;
      out += mu * detail::rotate(a.entries(), ctx.system_number(), theta);
    }
  } else {
    for (int k = 0; k < f.bins(); ++k) {
      const double mu = (omega.entries() * f.effect(k)).trace().real();
      out +=
          mu * detail::rotate(a.entries(), ctx.system_number(), f.angle(k));
    }
  }
  return Operator(ctx.system_shape(), std::move(out));
}

//============================================================================
// Structural diagnostics
//============================================================================

// || yen(AB) - yen(A) yen(B) ||_maxentry. Vanishes in the cyclic-sharp model
// where yen is a *-homomorphism; strictly positive for the unsharp binned
// canonical phase, where the product loses the intermediate terms whose
// shifted reference index falls outside the truncation. Those terms live on
// the edge rows, so this max-entry diagnostic does not decay as the
// reference dimension grows.
inline double star_hom_defect(const RelativisationContext& ctx,
                              const Operator& a, const Operator& b) {
  return max_abs_diff(yen(ctx, a * b), yen(ctx, a) * yen(ctx, b));
}

// || tau_T(yen(A)) - yen(A) ||_maxentry with N_T = N_S (x) 1 + 1 (x) N_R:
// membership of yen(A) in the invariant algebra. In the cyclic model the
// symmetry group is Z_{d_R}, so the symmetrisation there is the cyclic one:
// the sharp relativisation obeys its selection rule only modulo the group
// order.
inline double invariance_check(const RelativisationContext& ctx,
                               const Operator& a) {
  const Operator y = yen(ctx, a);
  const NumberOperator n_t = ctx.composite_number();
  if (ctx.reference_povm().kind() == PovmKind::cyclic_sharp) {
    return max_abs_diff(tau_cyclic(y, n_t, ctx.reference_dim()), y);
  }
  return max_abs_diff(tau(y, n_t), y);
}

//============================================================================
// Superoperator factories
//============================================================================

inline SuperOperator superop_of_tau_star(const NumberOperator& n) {
  return SuperOperator::materialise(
      n.shape(), n.shape(), [&n](const Matrix& m) {
        Matrix out = m;
        for (int i = 0; i < n.dim(); ++i)
          for (int j = 0; j < n.dim(); ++j)
            if (n.eigenvalue(i) != n.eigenvalue(j)) out(i, j) = 0.0;
        return out;
      });
}

inline SuperOperator superop_of_yen(const RelativisationContext& ctx) {
  return SuperOperator::materialise(
      ctx.system_shape(), ctx.composite_shape(), [&ctx](const Matrix& m) {
        return yen(ctx, Operator(ctx.system_shape(), m)).entries();
      });
}

inline SuperOperator superop_of_yen_star(const RelativisationContext& ctx) {
  return SuperOperator::materialise(
      ctx.composite_shape(), ctx.system_shape(), [&ctx](const Matrix& m) {
        return detail::yen_star_action(ctx, m);
      });
}

// V_omega: rho -> rho (x) omega, the isometric embedding whose dual is
// Gamma_omega.
inline SuperOperator superop_of_v_omega(const State& omega,
                                        const SpaceShape& system) {
  return SuperOperator::materialise(
      system, system.joined_with(omega.shape()),
      [&omega, &system](const Matrix& m) {
        return tensor(Operator(system, m), omega.density()).entries();
      });
}

inline SuperOperator superop_of_gamma_restrict(const State& omega,
                                               const SpaceShape& composite) {
  if (!composite.is_bipartite()) {
    throw ShapeError("superop_of_gamma_restrict: composite shape required");
  }
  return SuperOperator::materialise(
      composite, SpaceShape::single(composite.factor(0)),
      [&omega, &composite](const Matrix& m) {
        return gamma_restrict(omega, Operator(composite, m)).entries();
      });
}

}  // namespace relaframe

#endif  // RELAFRAME_RELATIVISE_HPP_
