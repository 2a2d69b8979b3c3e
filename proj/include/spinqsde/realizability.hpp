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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinqsde/model.hpp"

namespace spinqsde {

// Outcome of the physical-realizability test. `residuals` holds the
// Frobenius-norm defect of each named condition:
//   T1-i   : F0 - (G1 + i G2)(H1 + i H2)^dagger / 2
//   T1-ii  : G1 - theta(H2)
//   T1-iii : G2 + theta(H1)
//   T1-iv  : F + F^T + G1 G1^T + G2 G2^T
// `extracted` is populated exactly when the verdict is positive.
struct RealizabilityReport {
  bool verdict = false;
  double tolerance = 0.0;
  std::map<std::string, double> residuals;
  std::optional<PhysicalParams> extracted;

  double max_residual() const;
};

// Outcome of the commutation-relation preservation test, with residuals
//   antisym-G1    : G1 + G1^T
//   antisym-G2    : G2 + G2^T
//   F0-coupling   : G1 G2^T - G2 G1^T - theta(F0)
//   drift-balance : F + F^T + G1 G1^T + G2 G2^T
struct CCRReport {
  bool verdict = false;
  double tolerance = 0.0;
  std::map<std::string, double> residuals;

  double max_residual() const;
};

// Shared drift-balance defect; both reports quote this identical value so the
// two checkers can be compared bitwise on their common condition.
double drift_balance_residual(const BilinearQSDE& q);

// Decides whether q is generated by some (alpha, lambda), reporting all four
// condition residuals against `tol` scaled by max(1, coefficient norm).
RealizabilityReport check_physical_realizability(const BilinearQSDE& q,
                                                 double tol = 1e-9);

// Recovers the generating parameters of a realizable model:
//   alpha  = vec(F^T - F)^T E / 8   (i.e. theta(alpha) = (F^T - F)/4),
//   lambda = (H1 + i H2) / 2.
// Pure linear algebra; meaningful only when the realizability verdict holds.
PhysicalParams extract_parameters(const BilinearQSDE& q);

// Decides whether the flow of q preserves the Bloch commutation relations.
CCRReport check_ccr_preservation(const BilinearQSDE& q, double tol = 1e-9);

// Randomized implication sweep: for `trials` draws of physical parameters,
// realizes the model and requires the commutation-relation verdict to hold.
// Any counterexample is recorded with its seed index and worst residual.
struct HarnessReport {
  int trials = 0;
  std::vector<std::string> counterexamples;
  double worst_residual = 0.0;

  bool pass() const { return counterexamples.empty(); }
};

HarnessReport check_realizable_preserves_ccr(std::uint64_t seed, int trials);

}  // namespace spinqsde
