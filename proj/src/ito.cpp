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

#include "spinqsde/ito.hpp"

#include <algorithm>

#include "spinqsde/realizability.hpp"

namespace spinqsde {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ItoIncrement operator+(const ItoIncrement& a, const ItoIncrement& b) {
  return {a.dt_part + b.dt_part, a.dw1_part + b.dw1_part,
          a.dw2_part + b.dw2_part};
}

ItoIncrement operator-(const ItoIncrement& a, const ItoIncrement& b) {
  return {a.dt_part - b.dt_part, a.dw1_part - b.dw1_part,
          a.dw2_part - b.dw2_part};
}

ItoIncrement operator*(const Complex& s, const ItoIncrement& a) {
  return {s * a.dt_part, s * a.dw1_part, s * a.dw2_part};
}

double max_abs(const ItoIncrement& a) {
  return std::max({max_abs(a.dt_part), max_abs(a.dw1_part),
                   max_abs(a.dw2_part)});
}

ItoIncrement ito_product(const ItoIncrement& a, const ItoIncrement& b) {
  // dt annihilates every factor, so only noise-noise terms survive, and all
  // of them land on dt via the quadrature table.
  ItoIncrement r;
  r.dt_part = pauli_product(a.dw1_part, b.dw1_part) +
              kI * pauli_product(a.dw1_part, b.dw2_part) -
              kI * pauli_product(a.dw2_part, b.dw1_part) +
              pauli_product(a.dw2_part, b.dw2_part);
  return r;
}

ItoIncrement mul_left(const PauliOperator& p, const ItoIncrement& a) {
  return {pauli_product(p, a.dt_part), pauli_product(p, a.dw1_part),
          pauli_product(p, a.dw2_part)};
}

ItoIncrement mul_right(const ItoIncrement& a, const PauliOperator& p) {
  return {pauli_product(a.dt_part, p), pauli_product(a.dw1_part, p),
          pauli_product(a.dw2_part, p)};
}

std::array<ItoIncrement, 3> qsde_increment(const BilinearQSDE& q) {
  std::array<ItoIncrement, 3> dx;
  for (int i = 0; i < 3; ++i) {
    dx[i].dt_part.c[0] = q.F0(i);
    for (int j = 0; j < 3; ++j) {
      dx[i].dt_part.c[j + 1] = q.F(i, j);
      dx[i].dw1_part.c[j + 1] = q.G1(i, j);
      dx[i].dw2_part.c[j + 1] = q.G2(i, j);
    }
  }
  return dx;
}

double ccr_residual(const BilinearQSDE& q) {
  const std::array<ItoIncrement, 3> dx = qsde_increment(q);
  const PauliOperator x[3] = {PauliOperator::sigma(1), PauliOperator::sigma(2),
                              PauliOperator::sigma(3)};

  // d(x_i x_j) expanded by the product rule plus the increment product.
  ItoIncrement d_outer[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d_outer[i][j] = mul_right(dx[i], x[j]) + mul_left(x[i], dx[j]) +
                      ito_product(dx[i], dx[j]);

  // theta(.) applied entrywise to the increment triple dx.
  const ItoIncrement zero;
  const ItoIncrement minus_dx[3] = {Complex(-1) * dx[0], Complex(-1) * dx[1],
                                    Complex(-1) * dx[2]};
  const ItoIncrement theta_dx[3][3] = {
      {zero, dx[2], minus_dx[1]},
      {minus_dx[2], zero, dx[0]},
      {dx[1], minus_dx[0], zero}};

  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const ItoIncrement defect =
          (d_outer[i][j] - d_outer[j][i]) - 2.0 * kI * theta_dx[i][j];
      worst = std::max(worst, max_abs(defect));
    }
  return worst;
}

EquivalenceReport oracle_equivalence(std::uint64_t seed, int trials,
                                     double tol) {
  EquivalenceReport rep;
  rep.realizable_trials = trials;
  rep.arbitrary_trials = trials;

  Rng rng(seed);
  const auto compare = [&](const BilinearQSDE& q, const char* batch, int t) {
    const double scale = std::max(1.0, coefficient_norm(q));
    const bool increment_route = ccr_residual(q) <= tol * scale;
    const bool matrix_route = check_ccr_preservation(q, tol).verdict;
    if (increment_route != matrix_route) {
      ++rep.disagreements;
      if (rep.notes.size() < 8)
        rep.notes.push_back(std::string(batch) + " trial " +
                            std::to_string(t) + ": increment route says " +
                            (increment_route ? "yes" : "no") +
                            ", matrix route says " +
                            (matrix_route ? "yes" : "no"));
    }
  };

  for (int t = 0; t < trials; ++t) compare(realize(sample_params(rng)), "realizable", t);
  for (int t = 0; t < trials; ++t) compare(sample_qsde(rng), "arbitrary", t);
  return rep;
}

}  // namespace spinqsde
