// Copyright 2026 The fgqc Authors
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

// Two three-level atoms: levels {g, e, r}, qubit encoded as |0> = |g>,
// |1> = |e>. Composite index is 3 * l1 + l2 with atom 1 the left factor.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace fgqc {

using cplx = std::complex<double>;

using Op2 = Eigen::Matrix<cplx, 2, 2>;
using Op3 = Eigen::Matrix<cplx, 3, 3>;
using Op4 = Eigen::Matrix<cplx, 4, 4>;
using Op9 = Eigen::Matrix<cplx, 9, 9>;
using Vec2 = Eigen::Matrix<cplx, 2, 1>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;
using StateVector = Eigen::Matrix<cplx, 9, 1>;

/// Any operator on the 9-dimensional two-atom space.
using CompositeOperator = Op9;

template <int Dim>
using OpD = Eigen::Matrix<cplx, Dim, Dim>;

inline constexpr cplx kI{0.0, 1.0};

enum class Level : int { g = 0, e = 1, r = 2 };

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int basis_index(Level atom1, Level atom2) {
  return 3 * static_cast<int>(atom1) + static_cast<int>(atom2);
}

/// Composite indices of |gg>, |ge>, |eg>, |ee> in the order |00>, |01>, |10>, |11>.
inline constexpr std::array<int, 4> kComputationalIndices{0, 1, 3, 4};

/// Level that encodes computational bit `bit` (0 -> g, 1 -> e).
Level computational_level(int bit);

/// |to><from| on a single atom.
Op3 transition(Level to, Level from);

Op9 tensor(const Op3& atom1, const Op3& atom2);
/// Runtime-sized variant; throws DimensionError unless both factors are 3x3.
Eigen::MatrixXcd tensor_checked(const Eigen::MatrixXcd& atom1, const Eigen::MatrixXcd& atom2);

/// Copies a 4x4 operator on {|00>,|01>,|10>,|11>} into the computational
/// rows/columns of a 9x9 operator, zero elsewhere.
Op9 embed_computational(const Op4& op);
/// Runtime-sized variant; throws DimensionError unless `op` is 4x4.
Eigen::MatrixXcd embed_checked(const Eigen::MatrixXcd& op);

Op4 project_computational(const Op9& op);

StateVector basis_state(Level atom1, Level atom2);

template <class Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <class Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Density matrix on the two-atom space. Construction checks Hermiticity
/// (1e-10), unit trace (1e-8) and eigenvalues >= -1e-8.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Op9& rho);

  static DensityMatrix pure(const StateVector& psi);
  /// Wraps without checks; for propagated output whose tolerances the caller reports.
  static DensityMatrix unchecked(const Op9& rho);

  const Op9& matrix() const { return rho_; }
  double trace() const { return rho_.trace().real(); }
  double population(int index) const { return rho_(index, index).real(); }

 private:
  struct NoCheck {};
  DensityMatrix(const Op9& rho, NoCheck) : rho_(rho) {}
  Op9 rho_;
};

}  // namespace fgqc
