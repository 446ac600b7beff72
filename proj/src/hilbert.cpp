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

#include "fgqc/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace fgqc {

Level computational_level(int bit) {
  if (bit == 0) return Level::g;
  if (bit == 1) return Level::e;
  throw std::invalid_argument("computational bit must be 0 or 1, got " + std::to_string(bit));
}

Op3 transition(Level to, Level from) {
  Op3 m = Op3::Zero();
  m(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  return m;
}

Op9 tensor(const Op3& atom1, const Op3& atom2) {
  Op9 out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.block<3, 3>(3 * a, 3 * b) = atom1(a, b) * atom2;
  return out;
}

Eigen::MatrixXcd tensor_checked(const Eigen::MatrixXcd& atom1, const Eigen::MatrixXcd& atom2) {
  if (atom1.rows() != 3 || atom1.cols() != 3 || atom2.rows() != 3 || atom2.cols() != 3)
    throw DimensionError("tensor expects two 3x3 single-atom operators");
  return tensor(Op3(atom1), Op3(atom2));
}

Op9 embed_computational(const Op4& op) {
  Op9 out = Op9::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(kComputationalIndices[i], kComputationalIndices[j]) = op(i, j);
  return out;
}

Eigen::MatrixXcd embed_checked(const Eigen::MatrixXcd& op) {
  if (op.rows() != 4 || op.cols() != 4)
    throw DimensionError("embed_computational expects a 4x4 operator");
  return embed_computational(Op4(op));
}

Op4 project_computational(const Op9& op) {
  Op4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = op(kComputationalIndices[i], kComputationalIndices[j]);
  return out;
}

StateVector basis_state(Level atom1, Level atom2) {
  StateVector v = StateVector::Zero();
  v(basis_index(atom1, atom2)) = 1.0;
  return v;
}

DensityMatrix::DensityMatrix(const Op9& rho) : rho_(rho) {
  if (!rho.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if (hermiticity_error(rho) > 1e-10) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Op9> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("zero state vector");
  const StateVector u = psi / n;
  return DensityMatrix(Op9(u * u.adjoint()));
}

DensityMatrix DensityMatrix::unchecked(const Op9& rho) { return DensityMatrix(rho, NoCheck{}); }

}  // namespace fgqc
