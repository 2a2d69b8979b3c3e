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

#include "spinqsde/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinqsde {

namespace {
constexpr Complex kI{0.0, 1.0};
}

PauliOperator PauliOperator::sigma(int i) {
  if (i < 0 || i > 3)
    throw std::domain_error("PauliOperator::sigma: index must lie in 0..3");
  PauliOperator p;
  p.c[static_cast<std::size_t>(i)] = 1.0;
  return p;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  for (int i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
  for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}

PauliOperator& PauliOperator::operator*=(const Complex& s) {
  for (auto& x : c) x *= s;
  return *this;
}

PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
  return a += b;
}

PauliOperator operator-(PauliOperator a, const PauliOperator& b) {
  return a -= b;
}

PauliOperator operator-(PauliOperator a) { return a *= Complex(-1.0); }

PauliOperator operator*(const Complex& s, PauliOperator a) { return a *= s; }

PauliOperator operator*(PauliOperator a, const Complex& s) { return a *= s; }

double max_abs(const PauliOperator& a) {
  double m = 0.0;
  for (const auto& x : a.c) m = std::max(m, std::abs(x));
  return m;
}

PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator r;
  r.c[0] = a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
  r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + kI * (a.c[2] * b.c[3] - a.c[3] * b.c[2]);
  r.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] + kI * (a.c[3] * b.c[1] - a.c[1] * b.c[3]);
  r.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + kI * (a.c[1] * b.c[2] - a.c[2] * b.c[1]);
  return r;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  return pauli_product(a, b) - pauli_product(b, a);
}

Eigen::Matrix2cd to_matrix(const PauliOperator& a) {
  Eigen::Matrix2cd m;
  m << a.c[0] + a.c[3], a.c[1] - kI * a.c[2],  //
      a.c[1] + kI * a.c[2], a.c[0] - a.c[3];
  return m;
}

PauliOperator from_matrix(const Eigen::Matrix2cd& m) {
  PauliOperator p;
  p.c[0] = 0.5 * (m(0, 0) + m(1, 1));
  p.c[1] = 0.5 * (m(0, 1) + m(1, 0));
  p.c[2] = 0.5 * kI * (m(0, 1) - m(1, 0));
  p.c[3] = 0.5 * (m(0, 0) - m(1, 1));
  return p;
}

OuterRelationsReport pauli_outer_relations_check() {
  // theta over operator entries: row i, column j of theta(x) for
  // x = (sigma1, sigma2, sigma3).
  const PauliOperator zero;
  const PauliOperator s1 = PauliOperator::sigma(1);
  const PauliOperator s2 = PauliOperator::sigma(2);
  const PauliOperator s3 = PauliOperator::sigma(3);
  const PauliOperator tx[3][3] = {{zero, s3, -s2},  //
                                  {-s3, zero, s1},  //
                                  {s2, -s1, zero}};
  const PauliOperator x[3] = {s1, s2, s3};

  OuterRelationsReport report;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const PauliOperator outer = pauli_product(x[i], x[j]) -
                                  ((i == j ? PauliOperator::sigma(0) : zero) +
                                   kI * tx[i][j]);
      report.product_residual = std::max(report.product_residual, max_abs(outer));

      const PauliOperator comm = commutator(x[i], x[j]) - 2.0 * kI * tx[i][j];
      report.commutator_residual =
          std::max(report.commutator_residual, max_abs(comm));
    }
  return report;
}

}  // namespace spinqsde
