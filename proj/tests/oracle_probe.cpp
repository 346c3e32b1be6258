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

// Prints the values frozen into the unit and acceptance suites. Run after
// any change to the numerical kernels and re-freeze deliberately.

#include <cstdio>
#include <vector>

#include "relaframe/relaframe.hpp"

using namespace relaframe;

namespace {

RelativisationContext canonical_ctx(int ds, int dr, int bins) {
  return RelativisationContext(
      NumberOperator::ladder(ds),
      NumberPhasePair{NumberOperator::ladder(dr), canonical_phase(dr, bins)});
}

State plus_state() {
  CVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return State::pure(Vector(SpaceShape::single(2), v));
}

void probe_measure_of_coherent() {
  std::printf("== canonical_phase(32,16) on P[coherent(3)] ==\n");
  const PhasePOVM f = canonical_phase(32, 16);
  const State rho = State::pure(coherent_state(3.0, 32).state);
  const auto p = measure_of_state(f, rho);
  double sum = 0.0;
  for (double v : p) sum += v;
  for (int k = 6; k <= 9; ++k) std::printf("  p[%d] = %.15f\n", k, p[k]);
  std::printf("  sum = %.15f\n", sum);
}

void probe_norm1() {
  std::printf("== norm-1 diagnostic, K=8 arcs {4,5}, d sweep ==\n");
  for (int d : {2, 4, 8, 16, 32}) {
    const double v = norm1_diagnostic(canonical_phase(d, 8), {4, 5});
    std::printf("  d=%2d : %.15f\n", d, v);
  }
}

void probe_convergence(int dr) {
  std::printf("== absolute_vs_relative d_S=2, plus, sigma_x, d_R=%d ==\n", dr);
  const auto ctx = canonical_ctx(2, dr, 16);
  Matrix ax = Matrix::Zero(2, 2);
  ax(0, 1) = ax(1, 0) = 1.0;
  const Operator a(SpaceShape::single(2), ax);
  const auto seq = LocalisationSequence::coherent({1, 2, 4, 8}, dr);
  const ResultTable t = absolute_vs_relative(ctx, plus_state(), a, seq);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::printf("  beta=%g : e_restrict=%.15f e_relational=%.15f w=%.3e\n",
                std::get<double>(t.rows[i][0]), std::get<double>(t.rows[i][1]),
                std::get<double>(t.rows[i][2]), std::get<double>(t.rows[i][3]));
  }
}

void probe_derelativise(int dr) {
  std::printf("== derelativised_state_limit d_S=2, plus, d_R=%d ==\n", dr);
  const auto ctx = canonical_ctx(2, dr, 16);
  const auto seq = LocalisationSequence::coherent({1, 2, 4, 8}, dr);
  const ResultTable t = derelativised_state_limit(ctx, plus_state(), seq);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::printf("  beta=%g : delta=%.15f\n", std::get<double>(t.rows[i][0]),
                std::get<double>(t.rows[i][1]));
  }
}

void probe_homodyne(int dr) {
  std::printf("== homodyne beta=2 d_S=32 K=16 d_R=%d ==\n", dr);
  const auto ctx = canonical_ctx(32, dr, 16);
  const auto seq = LocalisationSequence::coherent({2, 4, 8}, dr);
  const ResultTable t = homodyne_compare(ctx, 2.0, 16, seq);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::printf("  beta_R=%g : tv=%.15f contrast=%.15f\n",
                std::get<double>(t.rows[i][0]), std::get<double>(t.rows[i][1]),
                std::get<double>(t.rows[i][2]));
  }
}

void probe_gamma_yen_sweep() {
  std::printf("== gamma_yen localisation sweep d_S=8 d_R=128 ==\n");
  const auto ctx = canonical_ctx(8, 128, 32);
  Matrix ax = Matrix::Zero(8, 8);
  for (int n = 0; n + 1 < 8; ++n) ax(n, n + 1) = ax(n + 1, n) = 1.0;
  const Operator a(SpaceShape::single(8), ax);
  for (double beta : {1.0, 2.0, 4.0, 8.0}) {
    const State omega = State::pure(coherent_state(beta, 128).state);
    const double err = max_abs_diff(gamma_yen(ctx, omega, a), a);
    std::printf("  beta=%g : |gamma_yen(A)-A| = %.15f\n", beta, err);
  }
}

void probe_star_hom_sweep() {
  std::printf("== star_hom_defect canonical d_S=3, d_R sweep ==\n");
  for (int dr : {8, 16, 32}) {
    const auto ctx = canonical_ctx(3, dr, 8);
    Rng rng(77);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      worst = std::max(worst,
                       star_hom_defect(ctx, rng.operator_on(ctx.system_shape()),
                                       rng.operator_on(ctx.system_shape())));
    }
    std::printf("  d_R=%2d : max defect = %.15f\n", dr, worst);
  }
}

void probe_witness() {
  std::printf("== mutual coherence witness, qubit plus pair ==\n");
  const auto n2 = NumberOperator::ladder(2);
  const auto report =
      mutual_coherence_witness(n2, n2, plus_state(), plus_state());
  std::printf("  witness_s=%.15f witness_r=%.15f\n", report.witness_system,
              report.witness_reference);
}

void probe_concentration() {
  std::printf("== concentration (bin containing 0, K=16) d_R=64 ==\n");
  const PhasePOVM f = canonical_phase(64, 16);
  const auto seq = LocalisationSequence::coherent({1, 2, 4, 8}, 64);
  const auto conc = sequence_concentration(seq, f);
  for (std::size_t i = 0; i < conc.size(); ++i) {
    std::printf("  beta=%g : %.15f (w=%.6f)\n", seq.parameters[i], conc[i],
                seq.truncation_weights[i]);
  }
}

}  // namespace

int main() {
  probe_measure_of_coherent();
  probe_norm1();
  probe_convergence(64);
  probe_convergence(128);
  probe_derelativise(64);
  probe_derelativise(128);
  probe_homodyne(64);
  probe_homodyne(128);
  probe_gamma_yen_sweep();
  probe_star_hom_sweep();
  probe_witness();
  probe_concentration();
  return 0;
}
