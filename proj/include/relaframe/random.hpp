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

#ifndef RELAFRAME_RANDOM_HPP_
#define RELAFRAME_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "relaframe/hilbert.hpp"

namespace relaframe {

// Seeded generator for random test and sweep inputs. One instance per run;
// every draw flows through it so runs replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return unif_(gen_); }
  double normal() { return norm_(gen_); }
  Complex cnormal() { return {norm_(gen_), norm_(gen_)}; }

  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
  }

  // Matrix of iid standard complex gaussians.
  Matrix ginibre(int rows, int cols) {
    Matrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) g(i, j) = cnormal();
    return g;
  }

  Operator operator_on(const SpaceShape& shape) {
    return Operator(shape, ginibre(shape.total(), shape.total()));
  }

  Operator hermitian_on(const SpaceShape& shape) {
    Matrix g = ginibre(shape.total(), shape.total());
    return Operator(shape, 0.5 * (g + g.adjoint().eval()));
  }

  // Random effect: hermitian with spectrum shifted and scaled into [0, 1].
  Operator effect_on(const SpaceShape& shape) {
    Operator h = hermitian_on(shape);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    const double span = (hi - lo) > 0 ? (hi - lo) : 1.0;
    const int n = shape.total();
    return Operator(shape,
                    ((h.entries() - lo * Matrix::Identity(n, n)) / span).eval());
  }

  Vector unit_vector_on(const SpaceShape& shape) {
    CVector v(shape.total());
    for (int i = 0; i < shape.total(); ++i) v(i) = cnormal();
    v /= v.norm();
    return Vector(shape, std::move(v));
  }

  State pure_state_on(const SpaceShape& shape) {
    return State::pure(unit_vector_on(shape));
  }

  // Full-rank random density matrix G G^dagger / tr.
  State state_on(const SpaceShape& shape) {
    Matrix g = ginibre(shape.total(), shape.total());
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return State(Operator(shape, std::move(rho)));
  }

  // Random number-diagonal state.
  State diagonal_state_on(const SpaceShape& shape) {
    const int n = shape.total();
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i) p(i) = std::norm(cnormal());
    p /= p.sum();
    return State(Operator(shape, p.cast<Complex>().asDiagonal()));
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> norm_{0.0, 1.0};
};

// splitmix64 step; used to fold several seeds into one deterministically.
inline std::uint64_t mix_seed(std::uint64_t state, std::uint64_t value) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL + value;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace relaframe

#endif  // RELAFRAME_RANDOM_HPP_
