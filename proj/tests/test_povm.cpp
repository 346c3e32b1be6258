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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "relaframe/povm.hpp"
#include "relaframe/random.hpp"

using namespace relaframe;

TEST_CASE("arc partition: geometry and containment") {
  const ArcPartition p(4);
  CHECK(p.width() == doctest::Approx(kPi / 2.0));
  CHECK(p.lower(0) == doctest::Approx(-kPi));
  CHECK(p.midpoint(1) == doctest::Approx(-kPi / 4.0));
  CHECK(p.bin_containing(0.0) == 2);
  CHECK(p.bin_containing(-kPi) == 0);
  CHECK(p.bin_containing(kPi) == 0);  // identified endpoints
  CHECK(p.bin_containing(kPi - 1e-9) == 3);
  CHECK(p.shifted(3, 2) == 1);
}

TEST_CASE("canonical_phase: scalar and single-bin degenerate cases") {
  const PhasePOVM trivial = canonical_phase(1, 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(trivial.effect(k)(0, 0) - Complex(1.0 / 3.0)) < 1e-15);
  }

  const PhasePOVM whole = canonical_phase(2, 1);
  CHECK(max_abs(whole.effect(0) - Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("canonical_phase: closed-form entries at d=2, K=4") {
  const PhasePOVM f = canonical_phase(2, 4);
  // |e^{i pi/2} - 1| / (2 pi) = sqrt(2) / (2 pi)
  const double want = std::sqrt(2.0) / (2.0 * kPi);
  for (int k = 0; k < 4; ++k) {
    CHECK(f.effect(k)(0, 0).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(f.effect(k)(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(f.effect(k)(0, 1)) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("canonical_phase: strictly unsharp effects for d >= 2") {
  for (int d : {2, 3, 8}) {
    const PhasePOVM f = canonical_phase(d, 6);
    for (int k = 0; k < f.bins(); ++k) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(f.effect(k),
                                               Eigen::EigenvaluesOnly);
      bool interior = false;
      for (int i = 0; i < d; ++i) {
        const double ev = es.eigenvalues()(i);
        if (ev > 1e-6 && ev < 1.0 - 1e-6) interior = true;
        CHECK(ev > -1e-10);
        CHECK(ev < 1.0 + 1e-10);
      }
      CHECK(interior);  // never projection valued under a bounded-below number
    }
  }
}

TEST_CASE("cyclic_angle_pvm: Fourier orthogonality and completeness") {
  const PhasePOVM p1 = cyclic_angle_pvm(1);
  CHECK(std::abs(p1.effect(0)(0, 0) - Complex(1.0)) < 1e-15);

  // d=2: projections onto (|0> +- |1>)/sqrt(2)
  const PhasePOVM p2 = cyclic_angle_pvm(2);
  Matrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  // the minus projection sits at angle pi ~ arc 0, plus at angle 0 ~ arc 1
  CHECK(max_abs(p2.effect(0) - minus) < 1e-14);
  CHECK(max_abs(p2.effect(1) - plus) < 1e-14);

  const PhasePOVM p4 = cyclic_angle_pvm(4);
  Matrix sum = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const Matrix prod = p4.effect(k) * p4.effect(l);
      if (k == l) {
        CHECK(max_abs(prod - p4.effect(k)) < 1e-12);
      } else {
        CHECK(max_abs(prod) < 1e-12);
      }
    }
    sum += p4.effect(k);
  }
  CHECK(max_abs(sum - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("covariance_defect: canonical and cyclic constructors are covariant") {
  const NumberPhasePair canonical{NumberOperator::ladder(3),
                                  canonical_phase(3, 6)};
  CHECK(covariance_defect(canonical) < 1e-12);

  const NumberPhasePair cyclic{NumberOperator::ladder(4), cyclic_angle_pvm(4)};
  CHECK(covariance_defect(cyclic) < 1e-12);

  const NumberPhasePair single{NumberOperator::ladder(3),
                               canonical_phase(3, 1)};
  CHECK(covariance_defect(single) == 0.0);
}

TEST_CASE("covariance_defect: broken pairing is detected") {
  // A permuted number operator destroys the phase-rotation identity.
  const NumberPhasePair bad{NumberOperator(SpaceShape::single(3), {0, 2, 1}),
                            canonical_phase(3, 6)};
  CHECK(covariance_defect(bad) > 1e-3);
}

TEST_CASE("norm1_diagnostic: exact cases and the localisation sweep") {
  const PhasePOVM f8 = canonical_phase(5, 8);
  std::vector<int> all_bins;
  for (int k = 0; k < 8; ++k) all_bins.push_back(k);
  CHECK(norm1_diagnostic(f8, all_bins) == doctest::Approx(1.0).epsilon(1e-12));

  const PhasePOVM cyc = cyclic_angle_pvm(5);
  CHECK(norm1_diagnostic(cyc, {2}) == doctest::Approx(1.0).epsilon(1e-12));

  // Quarter circle [0, pi/2): arcs 4 and 5 of the 8-arc partition. Frozen
  // from the oracle run; approaches 1 only as d grows (finite d never
  // attains it).
  const std::vector<std::pair<int, double>> want = {
      {2, 0.475079079039277},  {4, 0.791543125895737},
      {8, 0.983051006818070},  {16, 0.999956555803971},
      {32, 0.999999999839752},
  };
  double prev = 0.0;
  for (const auto& [d, value] : want) {
    const double got = norm1_diagnostic(canonical_phase(d, 8), {4, 5});
    CHECK(got == doctest::Approx(value).epsilon(1e-9));
    CHECK(got > prev);
    CHECK(got < 1.0);
    prev = got;
  }
  CHECK(1.0 - prev < 1e-6);

  CHECK_THROWS_AS(norm1_diagnostic(f8, {}), EmptySelectionError);
  CHECK_THROWS_AS(norm1_diagnostic(f8, {42}), ShapeError);
}

TEST_CASE("measure_of_state: number eigenstates are phase indefinite") {
  const PhasePOVM f = canonical_phase(4, 8);
  for (int n = 0; n < 4; ++n) {
    const State rho = State::pure(Vector::basis(SpaceShape::single(4), n));
    for (double p : measure_of_state(f, rho)) {
      CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    }
  }

  // Dephased states keep the uniform distribution.
  Rng rng(31);
  const State rho = rng.state_on(SpaceShape::single(4));
  const State dephased = tau_star(rho, NumberOperator::ladder(4));
  for (double p : measure_of_state(f, dephased)) {
    CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  }
}

TEST_CASE("measure_of_state: coherent amplitude 3 at d=32, K=16") {
  const PhasePOVM f = canonical_phase(32, 16);
  const State rho = State::pure(coherent_state(3.0, 32).state);
  const auto p = measure_of_state(f, rho);

  double sum = 0.0;
  int mode = 0;
  for (int k = 0; k < 16; ++k) {
    sum += p[k];
    if (p[k] > p[mode]) mode = k;
    CHECK(p[k] > -1e-12);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  // The distribution is symmetric about theta = 0, which is the shared edge
  // of arcs 7 and 8, so the mass splits evenly across them; the frozen
  // oracle value is just below one half.
  CHECK((mode == 7 || mode == 8));
  CHECK(p[7] == doctest::Approx(p[8]).epsilon(1e-12));
  CHECK(p[7] == doctest::Approx(0.487943553243770).epsilon(1e-9));

  const PhasePOVM whole = canonical_phase(32, 1);
  const auto single = measure_of_state(whole, rho);
  CHECK(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("povm validation: malformed effect lists are rejected") {
  const ArcPartition p(2);
  // effects that do not resolve the identity
  std::vector<Matrix> bad = {0.25 * Matrix::Identity(2, 2),
                             0.25 * Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(PhasePOVM(2, p, bad, {p.midpoint(0), p.midpoint(1)},
                            PovmKind::custom),
                  InvariantError);

  // an effect above the identity
  std::vector<Matrix> over = {1.5 * Matrix::Identity(2, 2),
                              -0.5 * Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(PhasePOVM(2, p, over, {p.midpoint(0), p.midpoint(1)},
                            PovmKind::custom),
                  InvariantError);
}

TEST_CASE("angle_operator: cyclic only, with the tagged spectrum") {
  const PhasePOVM cyc = cyclic_angle_pvm(4);
  const Operator phi = angle_operator(cyc);
  CHECK(phi.is_hermitian());
  Eigen::SelfAdjointEigenSolver<Matrix> es(phi.entries(),
                                           Eigen::EigenvaluesOnly);
  std::vector<double> want;
  for (int k = 0; k < 4; ++k) want.push_back(cyc.angle(k));
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 4; ++i) {
    CHECK(es.eigenvalues()(i) == doctest::Approx(want[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(angle_operator(canonical_phase(4, 4)), ShapeError);
}
