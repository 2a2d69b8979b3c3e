// Copyright 2026 The spinqsde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "spinqsde/algebra.hpp"
#include "spinqsde/pauli.hpp"
#include "spinqsde/rng.hpp"

namespace spinqsde {

// Physical description of an open two-level system: Hamiltonian coefficient
// row vector alpha (Hamiltonian = alpha . sigma, necessarily real) and field
// coupling row vector lambda (coupling operator L = lambda . sigma).
struct PhysicalParams {
  RowVec3 alpha = RowVec3::Zero();
  RowVec3c lambda = RowVec3c::Zero();
};

// Bilinear quantum stochastic model for the Bloch coordinate vector x:
//   dx = F0 dt + F x dt + G1 x dw1 + G2 x dw2,
//   dy_i = H_i x dt + dw_i,
// where w1, w2 are the self-adjoint quadrature noises. Every block is real.
struct BilinearQSDE {
  Vec3 F0 = Vec3::Zero();
  Mat3 F = Mat3::Zero();
  Mat3 G1 = Mat3::Zero();
  Mat3 G2 = Mat3::Zero();
  RowVec3 H1 = RowVec3::Zero();
  RowVec3 H2 = RowVec3::Zero();
};

// One sample of the mean Bloch vector along a trajectory.
struct BlochState {
  double t = 0.0;
  Vec3 r = Vec3::Zero();
};

// Hamiltonian and coupling operators in the sigma basis.
PauliOperator hamiltonian_operator(const PhysicalParams& p);
PauliOperator coupling_operator(const PhysicalParams& p);

// Frobenius norm of all coefficient blocks stacked; checkers scale their
// tolerance by max(1, coefficient_norm) so verdicts are size-invariant.
double coefficient_norm(const BilinearQSDE& q);

// Builds the quadrature-form model generated by (alpha, lambda):
//   F0 = -2i theta(lambda) lambda^dagger
//   F  = -2 theta(alpha) + lambda^dagger lambda + lambda^T lambda^#
//        - 2 (lambda lambda^dagger) I
//   G1 = theta(H2),  G2 = -theta(H1),
//   H1 = lambda + lambda^#,  H2 = i (lambda^# - lambda).
// All blocks are real by construction; if cancellation leaves an imaginary
// part above imag_tol (scaled by the block norm) a std::logic_error is thrown.
BilinearQSDE realize(const PhysicalParams& p, double imag_tol = 1e-12);

// Quadrature change of coordinates between the annihilation/creation pair
// (W, W^dagger) and the self-adjoint pair (w1, w2) = Q (W, W^dagger) with
// Q = [[1, 1], [-i, i]].
using ComplexPair = std::pair<Complex, Complex>;
Eigen::Matrix2cd quadrature_matrix();
ComplexPair quadrature_input(const ComplexPair& w);    // (W, W^dag) -> (w1, w2)
ComplexPair quadrature_output(const ComplexPair& y);   // same map, output pair
ComplexPair quadrature_inverse(const ComplexPair& q);  // (w1, w2) -> (W, W^dag)

// Vacuum mean flow d r/dt = F0 + F r integrated with fixed-step classical
// RK4; returns the sampled trajectory including t = 0. Step rule: full steps
// of dt with one shorter final step when dt does not divide T. Throws
// std::invalid_argument unless 0 < dt <= T.
std::vector<BlochState> simulate_mean(const BilinearQSDE& q, const Vec3& r0,
                                      double T, double dt);

// Independent route to the same trajectory: integrates the 2x2 master
// equation  d rho/dt = -i[Ham, rho] + L rho L^dag - (L^dag L rho +
// rho L^dag L)/2  from rho0 = (I + r0 . sigma)/2 with the same RK4 rule and
// reads back r_i = Tr(rho sigma_i). Throws std::domain_error if rho0 is not a
// state (|r0| > 1 + 1e-9).
std::vector<BlochState> master_mean_oracle(const PhysicalParams& p,
                                           const Vec3& r0, double T,
                                           double dt);

// Random model generators shared by harnesses and tests: alpha entries
// uniform in [-2, 2], lambda entries uniform over the unit disk; arbitrary
// models draw every block entry uniform in [-1, 1].
PhysicalParams sample_params(Rng& rng);
BilinearQSDE sample_qsde(Rng& rng);

}  // namespace spinqsde
