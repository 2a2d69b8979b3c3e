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

#include "spinqsde/algebra.hpp"

#include <algorithm>
#include <complex>

#include "spinqsde/rng.hpp"

namespace spinqsde {

namespace {

using Cx = std::complex<double>;
using Mat9c = Eigen::Matrix<Cx, 9, 9>;
using Vec9c = Eigen::Matrix<Cx, 9, 1>;

Vec3c random_vec3c(Rng& rng) {
  Vec3c v;
  for (int i = 0; i < 3; ++i) v(i) = Cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return v;
}

Mat3c random_mat3c(Rng& rng) {
  Mat3c m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      m(r, c) = Cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return m;
}

// Accumulates the worst residual per named identity, in first-seen order.
struct ResidualTable {
  std::vector<std::pair<std::string, double>> rows;

  void update(const std::string& name, double value) {
    for (auto& row : rows) {
      if (row.first == name) {
        row.second = std::max(row.second, value);
        return;
      }
    }
    rows.emplace_back(name, value);
  }
};

}  // namespace

int levi_civita(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
    throw std::domain_error("levi_civita: indices must lie in {1, 2, 3}");
  return (i - j) * (j - k) * (k - i) / 2;
}

Mat3 unvec(const Eigen::VectorXd& v) {
  if (v.size() != 9)
    throw std::domain_error("unvec: expected a 9-vector, got length " +
                            std::to_string(v.size()));
  Mat3 m;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) m(r, c) = v(3 * c + r);
  return m;
}

Mat3c unvec(const Eigen::VectorXcd& v) {
  if (v.size() != 9)
    throw std::domain_error("unvec: expected a 9-vector, got length " +
                            std::to_string(v.size()));
  Mat3c m;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) m(r, c) = v(3 * c + r);
  return m;
}

Mat3 generator(int i) {
  if (i < 1 || i > 3)
    throw std::domain_error("generator: index must lie in {1, 2, 3}");
  return theta(Vec3::Unit(i - 1));
}

const StackMat& e_matrix() {
  static const StackMat e = [] {
    StackMat m;
    for (int i = 0; i < 3; ++i) m.col(i) = vec(theta(Vec3::Unit(i)));
    return m;
  }();
  return e;
}

const Mat9& commutation_matrix() {
  static const Mat9 k = [] {
    Mat9 m = Mat9::Zero();
    // (K vec(A))(3i + j) = vec(A)(3j + i) = A(i, j) = vec(A^T)(3i + j).
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(3 * i + j, 3 * j + i) = 1.0;
    return m;
  }();
  return k;
}

double IdentityReport::max_residual() const {
  double worst = 0.0;
  for (const auto& [name, value] : residuals) worst = std::max(worst, value);
  return worst;
}

IdentityReport selftest_identities(std::uint64_t seed, int trials) {
  Rng rng(seed);
  ResidualTable table;

  const StackMat& E = e_matrix();
  const Mat9& K = commutation_matrix();
  const Mat9c Kc = K.cast<Cx>();
  const Eigen::Matrix<Cx, 9, 3> Ec = E.cast<Cx>();
  const Mat3c I3 = Mat3c::Identity();

  // Deterministic, finitely checkable identities.
  table.update("stack-orthogonality", (E.transpose() * E - 2.0 * Mat3::Identity()).norm());
  table.update("stack-projector", (E * E.transpose() - (Mat9::Identity() - K)).norm());
  table.update("stack-negation", (K * E + E).norm());

  double gen_outer = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const Mat3 lhs = generator(i) * generator(j).transpose();
      const Mat3 delta = i == j ? Mat3(Mat3::Identity()) : Mat3(Mat3::Zero());
      const Mat3 rhs =
          delta - Vec3::Unit(j - 1) * Vec3::Unit(i - 1).transpose();
      gen_outer = std::max(gen_outer, (lhs - rhs).norm());
    }
  table.update("generator-outer", gen_outer);

  // sum_i eps(i,j,k) eps(i,m,n) = d(j,m) d(k,n) - d(j,n) d(k,m), all 81 tuples.
  double contraction = 0.0;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          int lhs = 0;
          for (int i = 1; i <= 3; ++i)
            lhs += levi_civita(i, j, k) * levi_civita(i, m, n);
          const int rhs = (j == m && k == n ? 1 : 0) - (j == n && k == m ? 1 : 0);
          contraction = std::max(contraction, std::abs(double(lhs - rhs)));
        }
  table.update("epsilon-contraction", contraction);

  for (int t = 0; t < trials; ++t) {
    const Vec3c b = random_vec3c(rng);
    const Vec3c g = random_vec3c(rng);
    const Cx s(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Mat3c Tb = theta(b);
    const Mat3c Tg = theta(g);

    table.update("theta-pairing", (Tb * g + Tg * b).norm());
    table.update("theta-kernel", (Tb * b).norm());
    table.update("theta-linearity",
                 (theta((s * b + g).eval()) - s * Tb - Tg).norm());
    table.update("theta-stack", (vec(Tb) - Ec * b).norm());

    double gen_contraction = 0.0;
    for (int i = 1; i <= 3; ++i) {
      const Mat3c lhs = generator(i).cast<Cx>() * Tb;
      const Mat3c rhs =
          b * Vec3::Unit(i - 1).transpose().cast<Cx>() - b(i - 1) * I3;
      gen_contraction = std::max(gen_contraction, (lhs - rhs).norm());
    }
    table.update("generator-contraction", gen_contraction);

    table.update("theta-product",
                 (Tb * Tg - (g * b.transpose() - (b.transpose() * g)(0) * I3)).norm());
    table.update("theta-closure",
                 (theta((Tb * g).eval()) - (Tb * Tg - Tg * Tb)).norm());

    const Mat3c A = random_mat3c(rng);
    const Mat3c B = random_mat3c(rng);
    const Mat3c C = random_mat3c(rng);
    const Mat9c AB = kron(A, B);
    const Mat9c BA = kron(B, A);

    table.update("perm-transpose", (Kc * vec(A) - vec(A.transpose().eval())).norm());
    table.update("perm-kron-swap", (Kc * AB * Kc - BA).norm());
    table.update("kron-vec-product",
                 (vec((A * B * C).eval()) -
                  kron(C.transpose().eval(), A) * vec(B)).norm());

    table.update("sandwich-swap",
                 (Ec.transpose() * AB * Ec - Ec.transpose() * BA * Ec).norm());
    table.update("sandwich-identity",
                 (Ec.transpose() * kron(I3, A) * Ec -
                  (A.trace() * I3 - A.transpose())).norm());
    const Mat3c full = A.transpose() * B.transpose() +
                       B.transpose() * A.transpose() +
                       A.trace() * B.trace() * I3 -
                       B.trace() * A.transpose() - A.trace() * B.transpose() -
                       (A * B).trace() * I3;
    table.update("sandwich-full", (Ec.transpose() * AB * Ec - full).norm());
    table.update("sandwich-projector",
                 (Ec * Ec.transpose() * AB * Ec - (AB * Ec + BA * Ec)).norm());
  }

  IdentityReport report;
  report.trials = trials;
  report.residuals = std::move(table.rows);
  return report;
}

}  // namespace spinqsde
