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

#include "spinqsde/realizability.hpp"

#include <algorithm>
#include <cmath>

namespace spinqsde {

namespace {
constexpr Complex kI{0.0, 1.0};

double worst_of(const std::map<std::string, double>& residuals) {
  double worst = 0.0;
  for (const auto& [name, value] : residuals) worst = std::max(worst, value);
  return worst;
}
}  // namespace

double RealizabilityReport::max_residual() const { return worst_of(residuals); }

double CCRReport::max_residual() const { return worst_of(residuals); }

double drift_balance_residual(const BilinearQSDE& q) {
  return (q.F + q.F.transpose() + q.G1 * q.G1.transpose() +
          q.G2 * q.G2.transpose())
      .norm();
}

RealizabilityReport check_physical_realizability(const BilinearQSDE& q,
                                                 double tol) {
  RealizabilityReport rep;
  rep.tolerance = tol;

  const Mat3c g = q.G1.cast<Complex>() + kI * q.G2.cast<Complex>();
  const RowVec3c h = q.H1.cast<Complex>() + kI * q.H2.cast<Complex>();

  rep.residuals["T1-i"] =
      (q.F0.cast<Complex>() - 0.5 * (g * h.adjoint())).norm();
  rep.residuals["T1-ii"] = (q.G1 - theta(q.H2)).norm();
  rep.residuals["T1-iii"] = (q.G2 + theta(q.H1)).norm();
  rep.residuals["T1-iv"] = drift_balance_residual(q);

  rep.verdict = rep.max_residual() <= tol * std::max(1.0, coefficient_norm(q));
  if (rep.verdict) rep.extracted = extract_parameters(q);
  return rep;
}

PhysicalParams extract_parameters(const BilinearQSDE& q) {
  PhysicalParams p;
  // For generated models F^T - F = 4 theta(alpha); projecting through the
  // stack matrix inverts theta on the antisymmetric part of F.
  const Mat3 anti = q.F.transpose() - q.F;
  const Vec3 a = 0.125 * (e_matrix().transpose() * vec(anti));
  p.alpha = a.transpose();
  p.lambda = 0.5 * (q.H1.cast<Complex>() + kI * q.H2.cast<Complex>());
  return p;
}

CCRReport check_ccr_preservation(const BilinearQSDE& q, double tol) {
  CCRReport rep;
  rep.tolerance = tol;

  rep.residuals["antisym-G1"] = (q.G1 + q.G1.transpose()).norm();
  rep.residuals["antisym-G2"] = (q.G2 + q.G2.transpose()).norm();
  rep.residuals["F0-coupling"] =
      (q.G1 * q.G2.transpose() - q.G2 * q.G1.transpose() - theta(q.F0)).norm();
  rep.residuals["drift-balance"] = drift_balance_residual(q);

  rep.verdict = rep.max_residual() <= tol * std::max(1.0, coefficient_norm(q));
  return rep;
}

HarnessReport check_realizable_preserves_ccr(std::uint64_t seed, int trials) {
  HarnessReport rep;
  rep.trials = trials;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const PhysicalParams p = sample_params(rng);
    const BilinearQSDE q = realize(p);
    const CCRReport ccr = check_ccr_preservation(q);
    rep.worst_residual = std::max(rep.worst_residual, ccr.max_residual());
    if (!ccr.verdict)
      rep.counterexamples.push_back(
          "trial " + std::to_string(t) + ": commutation defect " +
          std::to_string(ccr.max_residual()));
  }
  return rep;
}

}  // namespace spinqsde
