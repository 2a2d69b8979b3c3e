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

#include <doctest.h>

#include <cmath>

#include "spinqsde/model.hpp"

using namespace spinqsde;

namespace {

constexpr Complex kI{0.0, 1.0};

PauliOperator coupling_dagger(const PhysicalParams& p) {
  PauliOperator l;
  for (int i = 0; i < 3; ++i) l.c[i + 1] = std::conj(p.lambda(i));
  return l;
}

// Worst coefficient defect between the operator-commutator route and the
// matrix route across the five bracket identities the coefficient model is
// built from. central/M describe the matrix route: entry i of the identity
// equals central_i * sigma0 + sum_j M_ij sigma_j.
double bracket_bridge_residual(const PhysicalParams& p) {
  const PauliOperator x[3] = {PauliOperator::sigma(1), PauliOperator::sigma(2),
                              PauliOperator::sigma(3)};
  const PauliOperator h = hamiltonian_operator(p);
  const PauliOperator l = coupling_operator(p);
  const PauliOperator ld = coupling_dagger(p);

  const RowVec3c lam = p.lambda;
  const double lam2 = lam.squaredNorm();
  const Mat3c i3 = Mat3c::Identity();

  struct Identity {
    PauliOperator lhs[3];
    Vec3c central;
    Mat3c coupling;
  };
  std::vector<Identity> ids(5);

  for (int i = 0; i < 3; ++i) {
    ids[0].lhs[i] = commutator(x[i], h);
    ids[1].lhs[i] = commutator(x[i], l);
    ids[2].lhs[i] = commutator(x[i], ld);
    ids[3].lhs[i] = pauli_product(ld, commutator(x[i], l));
    ids[4].lhs[i] = pauli_product(commutator(x[i], ld), l);
  }
  ids[0].central = Vec3c::Zero();
  ids[0].coupling = -2.0 * kI * theta(p.alpha).cast<Complex>();
  ids[1].central = Vec3c::Zero();
  ids[1].coupling = -2.0 * kI * theta(lam);
  ids[2].central = Vec3c::Zero();
  ids[2].coupling = -2.0 * kI * theta(lam.conjugate().eval());
  ids[3].central = -2.0 * kI * (theta(lam) * lam.adjoint());
  ids[3].coupling = -2.0 * (lam2 * i3 - lam.adjoint() * lam);
  ids[4].central = 2.0 * kI * (theta(lam) * lam.adjoint());
  ids[4].coupling = 2.0 * (lam2 * i3 - lam.transpose() * lam.conjugate());

  double worst = 0.0;
  for (const Identity& id : ids)
    for (int i = 0; i < 3; ++i) {
      PauliOperator rhs;
      rhs.c[0] = id.central(i);
      for (int j = 0; j < 3; ++j) rhs.c[j + 1] = id.coupling(i, j);
      worst = std::max(worst, max_abs(id.lhs[i] - rhs));
    }
  return worst;
}

// Independent oracle for the drift blocks of realize(): the adjoint-flow
// drift of x_i computed purely with operator products must reproduce row i
// of (F0, F).
double drift_bridge_residual(const PhysicalParams& p) {
  const BilinearQSDE q = realize(p);
  const PauliOperator h = hamiltonian_operator(p);
  const PauliOperator l = coupling_operator(p);
  const PauliOperator ld = coupling_dagger(p);
  const PauliOperator ldl = pauli_product(ld, l);

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const PauliOperator xi = PauliOperator::sigma(i + 1);
    const PauliOperator drift =
        kI * commutator(h, xi) + pauli_product(ld, pauli_product(xi, l)) -
        0.5 * (pauli_product(ldl, xi) + pauli_product(xi, ldl));
    PauliOperator row;
    row.c[0] = q.F0(i);
    for (int j = 0; j < 3; ++j) row.c[j + 1] = q.F(i, j);
    worst = std::max(worst, max_abs(drift - row));
  }
  return worst;
}

}  // namespace

TEST_CASE("realize: pure damping coupling along sigma1") {
  PhysicalParams p;
  p.lambda << Complex(1, 0), Complex(0, 0), Complex(0, 0);
  const BilinearQSDE q = realize(p);

  Mat3 f_expected = Mat3::Zero();
  f_expected(1, 1) = -2.0;
  f_expected(2, 2) = -2.0;
  Mat3 g2_expected = Mat3::Zero();
  g2_expected(1, 2) = -2.0;
  g2_expected(2, 1) = 2.0;

  CHECK(q.F0.norm() == 0.0);
  CHECK((q.F - f_expected).norm() == 0.0);
  CHECK(q.G1.norm() == 0.0);
  CHECK((q.G2 - g2_expected).norm() == 0.0);
  CHECK((q.H1 - RowVec3(2, 0, 0)).norm() == 0.0);
  CHECK(q.H2.norm() == 0.0);
}

TEST_CASE("realize: dephasing coupling i*sigma3") {
  PhysicalParams p;
  p.lambda << Complex(0, 0), Complex(0, 0), Complex(0, 1);
  const BilinearQSDE q = realize(p);

  Mat3 f_expected = Mat3::Zero();
  f_expected(0, 0) = -2.0;
  f_expected(1, 1) = -2.0;
  Mat3 g1_expected = Mat3::Zero();
  g1_expected(0, 1) = 2.0;
  g1_expected(1, 0) = -2.0;

  CHECK(q.F0.norm() == 0.0);
  CHECK((q.F - f_expected).norm() == 0.0);
  CHECK((q.G1 - g1_expected).norm() == 0.0);
  CHECK(q.G2.norm() == 0.0);
  CHECK(q.H1.norm() == 0.0);
  CHECK((q.H2 - RowVec3(0, 0, 2)).norm() == 0.0);
}

TEST_CASE("realize: detuned complex coupling with all blocks active") {
  PhysicalParams p;
  p.alpha << 1, 2, 3;
  p.lambda << Complex(1, 0), Complex(0, 1), Complex(0, 0);
  const BilinearQSDE q = realize(p);

  Mat3 f_expected;
  f_expected << -2, -6, 4,  //
      6, -2, -2,            //
      -4, 2, -4;
  Mat3 g1_expected;
  g1_expected << 0, 0, -2,  //
      0, 0, 0,              //
      2, 0, 0;
  Mat3 g2_expected;
  g2_expected << 0, 0, 0,  //
      0, 0, -2,            //
      0, 2, 0;

  CHECK((q.F0 - Vec3(0, 0, 4)).norm() == 0.0);
  CHECK((q.F - f_expected).norm() == 0.0);
  CHECK((q.G1 - g1_expected).norm() == 0.0);
  CHECK((q.G2 - g2_expected).norm() == 0.0);
  CHECK((q.H1 - RowVec3(2, 0, 0)).norm() == 0.0);
  CHECK((q.H2 - RowVec3(0, 2, 0)).norm() == 0.0);
}

TEST_CASE("realize: closed system has pure-rotation drift and no noise gain") {
  PhysicalParams p;
  p.alpha << -1, 0.5, 2;
  const BilinearQSDE q = realize(p);
  CHECK(q.F0.norm() == 0.0);
  CHECK((q.F + 2.0 * theta(p.alpha)).norm() == 0.0);
  CHECK(q.G1.norm() == 0.0);
  CHECK(q.G2.norm() == 0.0);
  CHECK(q.H1.norm() == 0.0);
  CHECK(q.H2.norm() == 0.0);
}

TEST_CASE("realize: noise gains are exactly antisymmetric for random draws") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const BilinearQSDE q = realize(sample_params(rng));
    CHECK((q.G1 + q.G1.transpose()).norm() == 0.0);
    CHECK((q.G2 + q.G2.transpose()).norm() == 0.0);
  }
}

TEST_CASE("bracket identities agree between operator and matrix routes") {
  Rng rng(32);
  for (int t = 0; t < 200; ++t)
    CHECK(bracket_bridge_residual(sample_params(rng)) < 1e-12);
}

TEST_CASE("drift blocks of realize match the operator-product oracle") {
  Rng rng(33);
  for (int t = 0; t < 200; ++t)
    CHECK(drift_bridge_residual(sample_params(rng)) < 1e-12);
}

TEST_CASE("quadrature map and its inverse") {
  const ComplexPair q = quadrature_input({Complex(1, 0), Complex(1, 0)});
  CHECK(q.first == Complex(2, 0));
  CHECK(q.second == Complex(0, 0));

  const ComplexPair q2 = quadrature_input({kI, -kI});
  CHECK(q2.first == Complex(0, 0));
  CHECK(q2.second == Complex(2, 0));

  Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    const ComplexPair w{Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                        Complex(rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const ComplexPair back = quadrature_inverse(quadrature_input(w));
    CHECK(std::abs(back.first - w.first) < 1e-15);
    CHECK(std::abs(back.second - w.second) < 1e-15);
    const ComplexPair back2 = quadrature_input(quadrature_inverse(w));
    CHECK(std::abs(back2.first - w.first) < 1e-15);
    CHECK(std::abs(back2.second - w.second) < 1e-15);
  }

  // Output map is the same change of coordinates.
  const ComplexPair y = quadrature_output({Complex(1, 0), Complex(1, 0)});
  CHECK(y.first == Complex(2, 0));
}

TEST_CASE("quadrature transport of the vacuum product table") {
  // Q [[0,1],[0,0]] Q^T = [[1, i], [-i, 1]] exactly: the table used by the
  // increment algebra.
  const Eigen::Matrix2cd Q = quadrature_matrix();
  Eigen::Matrix2cd vac;
  vac << 0, 1, 0, 0;
  const Eigen::Matrix2cd table = Q * vac * Q.transpose();
  Eigen::Matrix2cd expected;
  expected << Complex(1, 0), kI, -kI, Complex(1, 0);
  CHECK((table - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("simulate_mean: step rule lands exactly on T") {
  BilinearQSDE q;  // all zero: constant trajectory
  const auto traj = simulate_mean(q, Vec3(0.25, 0, 0), 1.0, 0.3);
  REQUIRE(traj.size() == 5);
  CHECK(traj[0].t == 0.0);
  CHECK(traj[1].t == doctest::Approx(0.3));
  CHECK(traj[4].t == 1.0);
  for (const auto& s : traj) CHECK((s.r - Vec3(0.25, 0, 0)).norm() == 0.0);
}

TEST_CASE("simulate_mean rejects bad step parameters") {
  BilinearQSDE q;
  CHECK_THROWS_AS((void)simulate_mean(q, Vec3::Zero(), 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_mean(q, Vec3::Zero(), 1.0, -0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_mean(q, Vec3::Zero(), 0.5, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)simulate_mean(q, Vec3::Zero(), -1.0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("dephasing trajectory decays to exp(-2) along sigma1") {
  PhysicalParams p;
  p.lambda << Complex(0, 0), Complex(0, 0), Complex(0, 1);
  const BilinearQSDE q = realize(p);
  const auto traj = simulate_mean(q, Vec3(1, 0, 0), 1.0, 1e-3);
  const BlochState& end = traj.back();
  CHECK(end.t == 1.0);
  CHECK(std::abs(end.r(0) - std::exp(-2.0)) < 1e-9);
  CHECK(end.r(1) == 0.0);
  CHECK(end.r(2) == 0.0);
}

TEST_CASE("closed system conserves the Bloch norm") {
  PhysicalParams p;
  p.alpha << 1, 2, 3;
  const BilinearQSDE q = realize(p);
  const Vec3 r0(0.36, -0.48, 0.8);
  const auto traj = simulate_mean(q, r0, 1.0, 1e-3);
  for (const auto& s : traj)
    CHECK(std::abs(s.r.norm() - r0.norm()) < 1e-8);
}

TEST_CASE("master-equation oracle reproduces the linear mean flow") {
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const PhysicalParams p = sample_params(rng);
    const BilinearQSDE q = realize(p);
    Vec3 r0;
    for (int i = 0; i < 3; ++i) r0(i) = rng.uniform(-0.5, 0.5);
    const auto mean = simulate_mean(q, r0, 1.0, 1e-2);
    const auto oracle = master_mean_oracle(p, r0, 1.0, 1e-2);
    REQUIRE(mean.size() == oracle.size());
    for (std::size_t k = 0; k < mean.size(); ++k) {
      CHECK(mean[k].t == oracle[k].t);
      CHECK((mean[k].r - oracle[k].r).norm() < 1e-10);
    }
  }
}

TEST_CASE("maximally mixed state is a fixed point of dephasing") {
  PhysicalParams p;
  p.lambda << Complex(0, 0), Complex(0, 0), Complex(0, 1);
  const auto traj = master_mean_oracle(p, Vec3::Zero(), 0.5, 1e-2);
  for (const auto& s : traj) CHECK(s.r.norm() < 1e-14);
}

TEST_CASE("master-equation oracle rejects initial vectors outside the ball") {
  PhysicalParams p;
  CHECK_THROWS_AS((void)master_mean_oracle(p, Vec3(1.5, 0, 0), 1.0, 0.1),
                  std::domain_error);
}

TEST_CASE("realizable flows keep states inside the Bloch ball") {
  Rng rng(36);
  for (int t = 0; t < 20; ++t) {
    const PhysicalParams p = sample_params(rng);
    const BilinearQSDE q = realize(p);
    Vec3 dir;
    for (int i = 0; i < 3; ++i) dir(i) = rng.uniform(-1, 1);
    if (dir.norm() < 1e-6) dir = Vec3(1, 0, 0);
    const Vec3 r0 = dir / dir.norm();
    for (const auto& s : simulate_mean(q, r0, 1.0, 1e-3))
      CHECK(s.r.norm() <= 1.0 + 1e-6);
  }
}

TEST_CASE("samplers stay in their documented ranges and are seed-stable") {
  Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    const PhysicalParams p = sample_params(rng);
    for (int i = 0; i < 3; ++i) {
      CHECK(p.alpha(i) >= -2.0);
      CHECK(p.alpha(i) <= 2.0);
      CHECK(std::abs(p.lambda(i)) <= 1.0);
    }
  }

  Rng a(99), b(99);
  const PhysicalParams pa = sample_params(a);
  const PhysicalParams pb = sample_params(b);
  CHECK((pa.alpha - pb.alpha).norm() == 0.0);
  CHECK((pa.lambda - pb.lambda).norm() == 0.0);
  const BilinearQSDE qa = sample_qsde(a);
  const BilinearQSDE qb = sample_qsde(b);
  CHECK((qa.F - qb.F).norm() == 0.0);
  CHECK((qa.G2 - qb.G2).norm() == 0.0);
}

TEST_CASE("coefficient_norm stacks every block") {
  BilinearQSDE q;
  q.F0 << 2, 0, 0;
  q.F(0, 0) = 2;
  q.G1(1, 2) = 2;
  q.G2(2, 1) = 2;
  q.H1 << 0, 2, 0;
  q.H2 << 0, 0, 2;
  CHECK(coefficient_norm(q) == doctest::Approx(std::sqrt(24.0)));
}

TEST_CASE("hamiltonian and coupling operators place coefficients correctly") {
  PhysicalParams p;
  p.alpha << 4, 5, 6;
  p.lambda << Complex(1, 2), Complex(3, 4), Complex(5, 6);
  const PauliOperator h = hamiltonian_operator(p);
  CHECK(h.c[0] == Complex(0));
  CHECK(h.c[1] == Complex(4));
  CHECK(h.c[3] == Complex(6));
  const PauliOperator l = coupling_operator(p);
  CHECK(l.c[2] == Complex(3, 4));
}
