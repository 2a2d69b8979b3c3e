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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinqsde/model.hpp"
#include "spinqsde/pauli.hpp"

namespace spinqsde {

// A stochastic increment a dt + b dw1 + c dw2 whose coefficients are
// operators in the sigma basis. The quadrature product table
//   dw1 dw1 = dt      dw1 dw2 = i dt
//   dw2 dw1 = -i dt   dw2 dw2 = dt
// (dt annihilates everything) closes this space under multiplication.
struct ItoIncrement {
  PauliOperator dt_part;
  PauliOperator dw1_part;
  PauliOperator dw2_part;
};

ItoIncrement operator+(const ItoIncrement& a, const ItoIncrement& b);
ItoIncrement operator-(const ItoIncrement& a, const ItoIncrement& b);
ItoIncrement operator*(const Complex& s, const ItoIncrement& a);

// Largest coefficient magnitude over all three parts.
double max_abs(const ItoIncrement& a);

// Operator-valued product of two increments under the quadrature table;
// coefficient operators multiply with pauli_product in left-right order.
ItoIncrement ito_product(const ItoIncrement& a, const ItoIncrement& b);

// Left/right multiplication of every coefficient by a fixed operator.
ItoIncrement mul_left(const PauliOperator& p, const ItoIncrement& a);
ItoIncrement mul_right(const ItoIncrement& a, const PauliOperator& p);

// The increments dx_i of the model q with x = (sigma1, sigma2, sigma3)
// substituted symbolically:
//   dx_i = (F0_i sigma0 + sum_j F_ij sigma_j) dt
//          + (sum_j G1_ij sigma_j) dw1 + (sum_j G2_ij sigma_j) dw2.
std::array<ItoIncrement, 3> qsde_increment(const BilinearQSDE& q);

// Worst-case defect of the commutation-relation flow invariant, computed
// purely in the increment algebra:
//   d(x x^T)_ij = dx_i x_j + x_i dx_j + dx_i dx_j,
// antisymmetrized in (i, j) and compared against 2i theta(dx). Returns the
// max coefficient magnitude over all entries and increment parts. This route
// never consults the matrix-condition checker.
double ccr_residual(const BilinearQSDE& q);

// Cross-validation sweep of the increment-algebra route against the
// matrix-condition route on `trials` realizable models plus `trials`
// arbitrary coefficient draws. A disagreement is any model where
// (ccr_residual <= tol) differs from the matrix checker's verdict.
struct EquivalenceReport {
  int realizable_trials = 0;
  int arbitrary_trials = 0;
  int disagreements = 0;
  std::vector<std::string> notes;

  bool pass() const { return disagreements == 0; }
};

EquivalenceReport oracle_equivalence(std::uint64_t seed, int trials,
                                     double tol = 1e-9);

}  // namespace spinqsde
