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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinqsde {

using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using RowVec3 = Eigen::RowVector3d;
using RowVec3c = Eigen::RowVector3cd;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using StackMat = Eigen::Matrix<double, 9, 3>;  // the column-stacked generator matrix E

// Thrown by theta_inverse when the input is not antisymmetric to tolerance.
class SymmetryViolation : public std::runtime_error {
 public:
  SymmetryViolation(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Totally antisymmetric symbol on indices 1..3; throws std::domain_error for
// indices outside that range.
int levi_civita(int i, int j, int k);

// Maps a 3-vector (row or column, real or complex) to the antisymmetric
// matrix [[0, b3, -b2], [-b3, 0, b1], [b2, -b1, 0]], so that theta(b)*c is the
// cross-product-like pairing used throughout the toolkit.
template <typename Derived>
auto theta(const Eigen::MatrixBase<Derived>& b)
    -> Eigen::Matrix<typename Derived::Scalar, 3, 3> {
  static_assert(Derived::SizeAtCompileTime == 3,
                "theta expects a 3-component vector");
  using S = typename Derived::Scalar;
  typename Derived::PlainObject v = b.derived();
  Eigen::Matrix<S, 3, 3> m;
  m << S(0), v(2), -v(1),  //
      -v(2), S(0), v(0),   //
      v(1), -v(0), S(0);
  return m;
}

// Inverse of theta on (numerically) antisymmetric matrices. The input is
// symmetrized before extraction; if its symmetric part exceeds
// tol * max(1, ||M||_F) a SymmetryViolation carrying the residual is thrown.
template <typename Derived>
auto theta_inverse(const Eigen::MatrixBase<Derived>& m_in, double tol = 1e-9)
    -> Eigen::Matrix<typename Derived::Scalar, 3, 1> {
  static_assert(Derived::RowsAtCompileTime == 3 &&
                    Derived::ColsAtCompileTime == 3,
                "theta_inverse expects a 3x3 matrix");
  using S = typename Derived::Scalar;
  const Eigen::Matrix<S, 3, 3> m = m_in.derived();
  const double sym = (m + m.transpose()).norm();
  const double diag = m.diagonal().cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.norm());
  if (sym > tol * scale || diag > tol * scale) {
    const double residual = std::max(sym, diag);
    throw SymmetryViolation(
        "theta_inverse: input is not antisymmetric (residual " +
            std::to_string(residual) + ")",
        residual);
  }
  const Eigen::Matrix<S, 3, 3> a = 0.5 * (m - m.transpose()).eval();
  return Eigen::Matrix<S, 3, 1>(a(1, 2), a(2, 0), a(0, 1));
}

// Column-major stacking of a fixed-size matrix into a vector.
template <typename Derived>
auto vec(const Eigen::MatrixBase<Derived>& m_in)
    -> Eigen::Matrix<typename Derived::Scalar,
                     static_cast<int>(Derived::RowsAtCompileTime) *
                         static_cast<int>(Derived::ColsAtCompileTime),
                     1> {
  static_assert(Derived::RowsAtCompileTime != Eigen::Dynamic &&
                    Derived::ColsAtCompileTime != Eigen::Dynamic,
                "vec expects fixed-size input");
  using S = typename Derived::Scalar;
  constexpr int rows = Derived::RowsAtCompileTime;
  constexpr int cols = Derived::ColsAtCompileTime;
  typename Derived::PlainObject m = m_in.derived();
  Eigen::Matrix<S, rows * cols, 1> out;
  int k = 0;
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) out(k++) = m(r, c);
  return out;
}

// Inverse stacking for the 3x3 case.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> unvec(const Eigen::Matrix<Scalar, 9, 1>& v) {
  Eigen::Matrix<Scalar, 3, 3> m;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) m(r, c) = v(3 * c + r);
  return m;
}

// Runtime-sized overloads; throw std::domain_error unless the length is 9.
Mat3 unvec(const Eigen::VectorXd& v);
Mat3c unvec(const Eigen::VectorXcd& v);

// Kronecker product of fixed-size matrices with a common scalar type.
template <typename D1, typename D2>
auto kron(const Eigen::MatrixBase<D1>& a_in, const Eigen::MatrixBase<D2>& b_in)
    -> Eigen::Matrix<typename D1::Scalar,
                     static_cast<int>(D1::RowsAtCompileTime) *
                         static_cast<int>(D2::RowsAtCompileTime),
                     static_cast<int>(D1::ColsAtCompileTime) *
                         static_cast<int>(D2::ColsAtCompileTime)> {
  static_assert(std::is_same_v<typename D1::Scalar, typename D2::Scalar>,
                "kron expects matching scalar types; cast explicitly");
  static_assert(D1::RowsAtCompileTime != Eigen::Dynamic &&
                    D2::RowsAtCompileTime != Eigen::Dynamic,
                "kron expects fixed-size inputs");
  constexpr int rb = D2::RowsAtCompileTime;
  constexpr int cb = D2::ColsAtCompileTime;
  typename D1::PlainObject a = a_in.derived();
  typename D2::PlainObject b = b_in.derived();
  Eigen::Matrix<typename D1::Scalar,
                static_cast<int>(D1::RowsAtCompileTime) *
                    static_cast<int>(D2::RowsAtCompileTime),
                static_cast<int>(D1::ColsAtCompileTime) *
                    static_cast<int>(D2::ColsAtCompileTime)>
      out;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      out.template block<rb, cb>(r * rb, c * cb) = a(r, c) * b;
  return out;
}

// Generator matrices theta(e_i) for the standard basis, indexed 1..3.
// All entries are 0 or +-1 and exactly representable.
Mat3 generator(int i);

// The 9x3 matrix whose i-th column is vec(generator(i+1)), i.e. the unique
// matrix with vec(theta(b)) == E * b for every column 3-vector b.
const StackMat& e_matrix();

// The 9x9 commutation matrix K with K * vec(A) == vec(A^T); equivalently
// K * (A (x) B) * K == B (x) A. Satisfies E^T E = 2I, E E^T = I - K, K E = -E.
const Mat9& commutation_matrix();

// Named residuals from a randomized identity sweep, e.g. for the self test.
struct IdentityReport {
  std::vector<std::pair<std::string, double>> residuals;
  int trials = 0;

  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};

// Runs `trials` randomized checks of every algebraic identity the rest of the
// toolkit leans on (theta pairing/kernel/product rules, generator products,
// stack-matrix relations, Kronecker sandwich identities, the exhaustive
// epsilon contraction) and reports the worst residual seen per identity.
IdentityReport selftest_identities(std::uint64_t seed, int trials);

}  // namespace spinqsde
