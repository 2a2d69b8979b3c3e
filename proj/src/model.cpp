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

#include "spinqsde/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinqsde {

namespace {

constexpr Complex kI{0.0, 1.0};

// Asserts a complex block is real up to imag_tol * max(1, ||m||) and strips
// the imaginary part. realize() produces real blocks identically, so any
// violation signals a programming error rather than bad input.
Mat3 require_real(const Mat3c& m, const char* what, double imag_tol) {
  const double scale = std::max(1.0, m.norm());
  if (m.imag().norm() > imag_tol * scale)
    throw std::logic_error(std::string("realize: block ") + what +
                           " has a non-real part beyond tolerance");
  return m.real();
}

Vec3 require_real(const Vec3c& v, const char* what, double imag_tol) {
  const double scale = std::max(1.0, v.norm());
  if (v.imag().norm() > imag_tol * scale)
    throw std::logic_error(std::string("realize: block ") + what +
                           " has a non-real part beyond tolerance");
  return v.real();
}

RowVec3 require_real(const RowVec3c& v, const char* what, double imag_tol) {
  const double scale = std::max(1.0, v.norm());
  if (v.imag().norm() > imag_tol * scale)
    throw std::logic_error(std::string("realize: block ") + what +
                           " has a non-real part beyond tolerance");
  return v.real();
}

// Number of RK4 steps: full steps of dt, with a shorter final step landing
// exactly on T when dt does not divide T.
long step_count(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0) || dt > T * (1.0 + 1e-12))
    throw std::invalid_argument("integration requires 0 < dt <= T");
  return std::lround(std::ceil(T / dt - 1e-9));
}

template <typename State, typename Rhs>
State rk4_step(const Rhs& f, const State& y, double h) {
  const State k1 = f(y);
  const State k2 = f(y + (0.5 * h) * k1);
  const State k3 = f(y + (0.5 * h) * k2);
  const State k4 = f(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

PauliOperator hamiltonian_operator(const PhysicalParams& p) {
  PauliOperator h;
  for (int i = 0; i < 3; ++i) h.c[i + 1] = p.alpha(i);
  return h;
}

PauliOperator coupling_operator(const PhysicalParams& p) {
  PauliOperator l;
  for (int i = 0; i < 3; ++i) l.c[i + 1] = p.lambda(i);
  return l;
}

double coefficient_norm(const BilinearQSDE& q) {
  return std::sqrt(q.F0.squaredNorm() + q.F.squaredNorm() +
                   q.G1.squaredNorm() + q.G2.squaredNorm() +
                   q.H1.squaredNorm() + q.H2.squaredNorm());
}

BilinearQSDE realize(const PhysicalParams& p, double imag_tol) {
  const RowVec3c l = p.lambda;
  const RowVec3c lc = l.conjugate();

  const RowVec3c h1 = l + lc;
  const RowVec3c h2 = kI * (lc - l);
  const Vec3c f0 = -2.0 * kI * (theta(l) * l.adjoint());
  const Mat3c f = -2.0 * theta(p.alpha).cast<Complex>() + l.adjoint() * l +
                  l.transpose() * lc -
                  2.0 * l.squaredNorm() * Mat3c::Identity();
  const Mat3c g1 = theta(h2);
  const Mat3c g2 = -theta(h1);

  BilinearQSDE q;
  q.F0 = require_real(f0, "F0", imag_tol);
  q.F = require_real(f, "F", imag_tol);
  q.G1 = require_real(g1, "G1", imag_tol);
  q.G2 = require_real(g2, "G2", imag_tol);
  q.H1 = require_real(h1, "H1", imag_tol);
  q.H2 = require_real(h2, "H2", imag_tol);
  return q;
}

Eigen::Matrix2cd quadrature_matrix() {
  Eigen::Matrix2cd q;
  q << Complex(1, 0), Complex(1, 0),  //
      -kI, kI;
  return q;
}

ComplexPair quadrature_input(const ComplexPair& w) {
  return {w.first + w.second, -kI * w.first + kI * w.second};
}

ComplexPair quadrature_output(const ComplexPair& y) {
  return quadrature_input(y);
}

ComplexPair quadrature_inverse(const ComplexPair& q) {
  return {0.5 * (q.first + kI * q.second), 0.5 * (q.first - kI * q.second)};
}

std::vector<BlochState> simulate_mean(const BilinearQSDE& q, const Vec3& r0,
                                      double T, double dt) {
  const long n = step_count(T, dt);
  const auto rhs = [&q](const Vec3& r) -> Vec3 { return q.F0 + q.F * r; };

  std::vector<BlochState> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  Vec3 r = r0;
  out.push_back({0.0, r});
  for (long k = 0; k < n; ++k) {
    const double t1 = std::min(static_cast<double>(k + 1) * dt, T);
    const double h = t1 - static_cast<double>(k) * dt;
    r = rk4_step(rhs, r, h);
    out.push_back({t1, r});
  }
  return out;
}

std::vector<BlochState> master_mean_oracle(const PhysicalParams& p,
                                           const Vec3& r0, double T,
                                           double dt) {
  const long n = step_count(T, dt);
  if (r0.norm() > 1.0 + 1e-9)
    throw std::domain_error(
        "master_mean_oracle: initial Bloch vector lies outside the unit "
        "ball, so the initial operator is not a density matrix");

  const Eigen::Matrix2cd Hm = to_matrix(hamiltonian_operator(p));
  const Eigen::Matrix2cd Lm = to_matrix(coupling_operator(p));
  const Eigen::Matrix2cd Ld = Lm.adjoint();
  const Eigen::Matrix2cd LdL = Ld * Lm;
  const Eigen::Matrix2cd s[3] = {to_matrix(PauliOperator::sigma(1)),
                                 to_matrix(PauliOperator::sigma(2)),
                                 to_matrix(PauliOperator::sigma(3))};

  Eigen::Matrix2cd rho = 0.5 * Eigen::Matrix2cd::Identity();
  for (int i = 0; i < 3; ++i) rho += 0.5 * r0(i) * s[i];

  const auto rhs = [&](const Eigen::Matrix2cd& m) -> Eigen::Matrix2cd {
    return -kI * (Hm * m - m * Hm) + Lm * m * Ld - 0.5 * (LdL * m + m * LdL);
  };
  const auto bloch = [&](double t, const Eigen::Matrix2cd& m) -> BlochState {
    BlochState st;
    st.t = t;
    for (int i = 0; i < 3; ++i) st.r(i) = (m * s[i]).trace().real();
    return st;
  };

  std::vector<BlochState> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(bloch(0.0, rho));
  for (long k = 0; k < n; ++k) {
    const double t1 = std::min(static_cast<double>(k + 1) * dt, T);
    const double h = t1 - static_cast<double>(k) * dt;
    rho = rk4_step(rhs, rho, h);
    out.push_back(bloch(t1, rho));
  }
  return out;
}

PhysicalParams sample_params(Rng& rng) {
  PhysicalParams p;
  for (int i = 0; i < 3; ++i) p.alpha(i) = rng.uniform(-2.0, 2.0);
  for (int i = 0; i < 3; ++i) p.lambda(i) = rng.unit_disk();
  return p;
}

BilinearQSDE sample_qsde(Rng& rng) {
  BilinearQSDE q;
  for (int i = 0; i < 3; ++i) q.F0(i) = rng.uniform(-1.0, 1.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) q.F(r, c) = rng.uniform(-1.0, 1.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) q.G1(r, c) = rng.uniform(-1.0, 1.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) q.G2(r, c) = rng.uniform(-1.0, 1.0);
  for (int i = 0; i < 3; ++i) q.H1(i) = rng.uniform(-1.0, 1.0);
  for (int i = 0; i < 3; ++i) q.H2(i) = rng.uniform(-1.0, 1.0);
  return q;
}

}  // namespace spinqsde
