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

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace spinqsde {

using Complex = std::complex<double>;

// An element of the complex span of {sigma0, sigma1, sigma2, sigma3}, stored
// as the coefficient 4-tuple c[0..3] with sigma0 the 2x2 identity. This basis
// is closed under multiplication, so all operator algebra stays symbolic.
struct PauliOperator {
  std::array<Complex, 4> c{};

  static PauliOperator sigma(int i);  // basis element, i in 0..3

  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(const Complex& s);
};

PauliOperator operator+(PauliOperator a, const PauliOperator& b);
PauliOperator operator-(PauliOperator a, const PauliOperator& b);
PauliOperator operator-(PauliOperator a);
PauliOperator operator*(const Complex& s, PauliOperator a);
PauliOperator operator*(PauliOperator a, const Complex& s);

// Largest coefficient magnitude, used as the norm in residual checks.
double max_abs(const PauliOperator& a);

// Product in the sigma basis:
//   (ab)_0 = a0 b0 + sum_i a_i b_i
//   (ab)_k = a0 b_k + a_k b0 + i * sum_{ij} eps_{ijk} a_i b_j.
PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b);

// ab - ba, via two products.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

// Concrete 2x2 form [[c0+c3, c1-i c2], [c1+i c2, c0-c3]] and its inverse.
Eigen::Matrix2cd to_matrix(const PauliOperator& a);
PauliOperator from_matrix(const Eigen::Matrix2cd& m);

// Residuals of the basis-vector outer relations: with x = (sigma1, sigma2,
// sigma3), checks entry by entry that x x^T = I + i * theta(x) and that
// [x, x^T] = 2i * theta(x), where theta(x) carries operator entries.
struct OuterRelationsReport {
  double product_residual = 0.0;
  double commutator_residual = 0.0;
  double max_residual() const {
    return product_residual > commutator_residual ? product_residual
                                                  : commutator_residual;
  }
};

OuterRelationsReport pauli_outer_relations_check();

}  // namespace spinqsde
