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

#ifndef RELAFRAME_COHERENCE_HPP_
#define RELAFRAME_COHERENCE_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "relaframe/hilbert.hpp"
#include "relaframe/povm.hpp"
#include "relaframe/relativise.hpp"
#include "relaframe/symmetry.hpp"
#include "relaframe/table.hpp"

namespace relaframe {

//============================================================================
// Localisation sequences
//============================================================================

// A family of reference states meant to localise increasingly sharply around
// zero phase: truncated coherent states of growing amplitude, or the top
// eigenvectors of shrinking-arc effect sums of the canonical phase.
struct LocalisationSequence {
  enum class Kind { coherent_amplitude, phase_peaked };

  Kind kind = Kind::coherent_amplitude;
  std::vector<double> parameters;  // amplitudes beta_i, or arc widths w_i
  int dimension = 0;
  std::vector<Vector> states;
  std::vector<double> truncation_weights;  // zero for phase-peaked states

  static LocalisationSequence coherent(const std::vector<double>& betas,
                                       int d_reference) {
    LocalisationSequence seq;
    seq.kind = Kind::coherent_amplitude;
    seq.parameters = betas;
    seq.dimension = d_reference;
    for (double beta : betas) {
      CoherentState c = coherent_state(Complex(beta, 0.0), d_reference);
      seq.states.push_back(c.state);
      seq.truncation_weights.push_back(c.truncation_weight);
    }
    return seq;
  }

  // For each width w: top eigenvector of the canonical-phase effect of the
  // arc of width ~w centred on zero. An odd arc count keeps zero at the
  // middle of its arc, so the eigenvector peaks at zero phase.
  static LocalisationSequence phase_peaked(const std::vector<double>& widths,
                                           int d_reference) {
    LocalisationSequence seq;
    seq.kind = Kind::phase_peaked;
    seq.parameters = widths;
    seq.dimension = d_reference;
    for (double w : widths) {
      if (w <= 0.0 || w > 2.0 * kPi) {
        throw SequenceError("phase_peaked: arc width must lie in (0, 2 pi]");
      }
      const int bins = 2 * int(std::floor(kPi / w)) + 1;
      PhasePOVM povm = canonical_phase(d_reference, bins);
      const int k0 = povm.partition().bin_containing(0.0);
      Eigen::SelfAdjointEigenSolver<Matrix> es(povm.effect(k0));
      CVector top = es.eigenvectors().col(d_reference - 1);
      top /= top.norm();
      seq.states.emplace_back(SpaceShape::single(d_reference), std::move(top));
      seq.truncation_weights.push_back(0.0);
    }
    return seq;
  }

  std::size_t size() const { return states.size(); }
};

// Mass assigned to the arc containing theta = 0 by each state of the
// sequence; the localisation figure of merit.
inline std::vector<double> sequence_concentration(
    const LocalisationSequence& seq, const PhasePOVM& povm) {
  const int k0 = povm.partition().bin_containing(0.0);
  std::vector<double> out;
  out.reserve(seq.size());
  for (const Vector& phi : seq.states) {
    out.push_back(measure_of_state(povm, State::pure(phi))[k0]);
  }
  return out;
}

//============================================================================
// Relational states and mutual coherence
//============================================================================

// tau_*(rho_S (x) rho_R) with respect to N_T: the invariant composite state
// carrying the pair's relative localisation.
inline State relational_state(const NumberOperator& n_s,
                              const NumberOperator& n_r, const State& rho_s,
                              const State& rho_r) {
  require_same_shape(rho_s.shape(), n_s.shape(), "relational_state");
  require_same_shape(rho_r.shape(), n_r.shape(), "relational_state");
  const NumberOperator n_t = CompositeNumber(n_s, n_r).total();
  return tau_star(State(tensor(rho_s.density(), rho_r.density())), n_t);
}

struct CoherenceReport {
  double witness_system = 0.0;
  double witness_reference = 0.0;
  bool mutually_coherent = false;
  double tolerance = 0.0;
};

// Decides mutual coherence of (rho_S, rho_R) by comparing invariant
// composite states: an invariant observable separating rho_S from its
// dephasing exists exactly when the tau_* images differ, so the trace
// distance of those images is a faithful scalar witness. The system and
// reference witnesses vanish together.
inline CoherenceReport mutual_coherence_witness(const NumberOperator& n_s,
                                                const NumberOperator& n_r,
                                                const State& rho_s,
                                                const State& rho_r,
                                                double tolerance = 1e-8) {
  const State joint = relational_state(n_s, n_r, rho_s, rho_r);
  const State dephased_s =
      relational_state(n_s, n_r, tau_star(rho_s, n_s), rho_r);
  const State dephased_r =
      relational_state(n_s, n_r, rho_s, tau_star(rho_r, n_r));
  CoherenceReport report;
  report.witness_system = trace_distance(joint, dephased_s);
  report.witness_reference = trace_distance(joint, dephased_r);
  report.tolerance = tolerance;
  report.mutually_coherent = report.witness_system > tolerance &&
                             report.witness_reference > tolerance;
  return report;
}

//============================================================================
// Convergence experiments
//============================================================================

namespace detail {

inline void require_nonempty(const LocalisationSequence& seq,
                             const char* where) {
  if (seq.states.empty()) {
    throw SequenceError(std::string(where) + ": empty localisation sequence");
  }
  for (const Vector& phi : seq.states) {
    if (phi.dim() != seq.dimension) {
      throw SequenceError(std::string(where) +
                          ": sequence state dimension mismatch");
    }
  }
}

}  // namespace detail

// For each reference state phi_i, two algebraically equal error columns for
// the agreement between the absolute A and its relative counterpart:
//   err_restriction = | tr[rho_S ((Gamma_phi o yen)(A) - A)] |
//   err_relational  = | tr[tau_*(rho_S (x) P[phi]) yen(A)] - tr[rho_S A] |
inline ResultTable absolute_vs_relative(const RelativisationContext& ctx,
                                        const State& rho_s, const Operator& a,
                                        const LocalisationSequence& seq) {
  require_same_shape(rho_s.shape(), ctx.system_shape(), "absolute_vs_relative");
  require_same_shape(a.shape(), ctx.system_shape(), "absolute_vs_relative");
  if (!a.is_hermitian()) {
    throw InvariantError("absolute_vs_relative: observable must be hermitian");
  }
  detail::require_nonempty(seq, "absolute_vs_relative");
  if (seq.dimension != ctx.reference_dim()) {
    throw ShapeError("absolute_vs_relative: sequence dimension " +
                     std::to_string(seq.dimension) + " != reference " +
                     std::to_string(ctx.reference_dim()));
  }

  const Operator y = yen(ctx, a);
  const double absolute = expectation(rho_s, a).real();

  ResultTable table;
  table.columns = {"param", "err_restriction", "err_relational",
                   "truncation_weight"};
  table.plot_pairs = {{"param", "err_restriction"},
                      {"param", "err_relational"}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const State omega = State::pure(seq.states[i]);
    const double via_restriction =
        std::abs(expectation(rho_s, gamma_yen(ctx, omega, a) - a).real());

    const State relational = State(ctx.symmetrise_composite(
        tensor(rho_s.density(), omega.density())));
    const double via_invariant =
        std::abs(expectation(relational, y).real() - absolute);

    table.add_row({seq.parameters[i], via_restriction, via_invariant,
                   seq.truncation_weights[i]});
  }
  return table;
}

// delta_i = trace_distance(yen_*(tau_*(rho_S (x) P[phi_i])), rho_S): how well
// the relational state family reproduces rho_S after derelativisation.
inline ResultTable derelativised_state_limit(const RelativisationContext& ctx,
                                             const State& rho_s,
                                             const LocalisationSequence& seq) {
  require_same_shape(rho_s.shape(), ctx.system_shape(),
                     "derelativised_state_limit");
  detail::require_nonempty(seq, "derelativised_state_limit");
  if (seq.dimension != ctx.reference_dim()) {
    throw ShapeError("derelativised_state_limit: sequence dimension mismatch");
  }

  ResultTable table;
  table.columns = {"param", "delta", "truncation_weight"};
  table.plot_pairs = {{"param", "delta"}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const State omega = State::pure(seq.states[i]);
    const State relational = State(ctx.symmetrise_composite(
        tensor(rho_s.density(), omega.density())));
    const double delta = trace_distance(yen_star(ctx, relational), rho_s);
    table.add_row({seq.parameters[i], delta, seq.truncation_weights[i]});
  }
  return table;
}

//============================================================================
// Homodyne-style comparison
//============================================================================

// Compares the absolute canonical-phase statistics of a coherent system
// state |beta> against the statistics of the relativised observable on the
// relational state, per reference state of the sequence:
//   lhs_k     = <beta| F^S(X_k) |beta>
//   rhs_{k,i} = tr[ yen(F^S(X_k)) tau_*(P[beta] (x) P[phi_i]) ]
// reported as the total variation distance per sequence element, together
// with the dephased contrast
//   (1/2) sum_k | <beta|F^S(X_k)|beta> - tr[tau_{S*}(P[beta]) F^S(X_k)] |
// separating the mutually coherent from the mutually incoherent pairing.
//
// rhs is evaluated in the reduced form <beta| (Gamma_phi o yen)(F^S(X_k))
// |beta>, which is algebraically identical (yen(F) is invariant, so tau_*
// may be moved through the pairing) and avoids materialising composite
// matrices at large d_S * d_R.
inline ResultTable homodyne_compare(const RelativisationContext& ctx,
                                    Complex beta, int system_bins,
                                    const LocalisationSequence& seq,
                                    double truncation_bound = 1e-6) {
  detail::require_nonempty(seq, "homodyne_compare");
  if (seq.dimension != ctx.reference_dim()) {
    throw ShapeError("homodyne_compare: sequence dimension mismatch");
  }
  const int d_s = ctx.system_dim();
  // The system state must actually fit in the truncation.
  const CoherentState sys =
      coherent_state(beta, d_s, truncation_bound, /*strict=*/true);
  const State rho_beta = State::pure(sys.state);

  const PhasePOVM f_s = canonical_phase(d_s, system_bins);
  const std::vector<double> lhs = measure_of_state(f_s, rho_beta);
  const std::vector<double> dephased =
      measure_of_state(f_s, tau_star(rho_beta, ctx.system_number()));

  double contrast = 0.0;
  for (int k = 0; k < system_bins; ++k) {
    contrast += 0.5 * std::abs(lhs[k] - dephased[k]);
  }

  ResultTable table;
  table.columns = {"param", "tv_error", "contrast", "truncation_weight"};
  table.plot_pairs = {{"param", "tv_error"}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const State omega = State::pure(seq.states[i]);
    double tv = 0.0;
    for (int k = 0; k < system_bins; ++k) {
      const double rhs =
          expectation(rho_beta,
                      gamma_yen(ctx, omega, f_s.effect_operator(k)))
              .real();
      tv += 0.5 * std::abs(lhs[k] - rhs);
    }
    table.add_row({seq.parameters[i], tv, contrast,
                   seq.truncation_weights[i]});
  }
  return table;
}

}  // namespace relaframe

#endif  // RELAFRAME_COHERENCE_HPP_
