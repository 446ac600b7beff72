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

#include "fgqc/fidelity.hpp"

namespace fgqc {

std::vector<Op2> pauli_basis1() {
  Op2 i = Op2::Identity();
  Op2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  return {i, x, y, z};
}

std::vector<Op4> pauli_basis2() {
  const auto p = pauli_basis1();
  std::vector<Op4> out;
  out.reserve(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Op4 m;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.block<2, 2>(2 * r, 2 * c) = p[a](r, c) * p[b];
      out.push_back(m);
    }
  return out;
}

namespace {

std::vector<Eigen::MatrixXcd> basis_for(int d) {
  std::vector<Eigen::MatrixXcd> out;
  if (d == 2) {
    for (const auto& m : pauli_basis1()) out.emplace_back(m);
  } else if (d == 4) {
    for (const auto& m : pauli_basis2()) out.emplace_back(m);
  } else {
    throw DimensionError("average_gate_fidelity supports d = 2 or 4, got " + std::to_string(d));
  }
  return out;
}

double formula(const Eigen::MatrixXcd& u, const std::vector<Eigen::MatrixXcd>& basis,
               const std::vector<Eigen::MatrixXcd>& images) {
  const double d = static_cast<double>(u.rows());
  cplx sum = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) sum += (u * basis[j].adjoint() * u.adjoint() * images[j]).trace();
  return (sum.real() + d * d) / (d * d * (d + 1.0));
}

void check_ideal(const Eigen::MatrixXcd& ideal, int d) {
  if (ideal.rows() != d || ideal.cols() != d) throw DimensionError("ideal gate dimension does not match the channel");
  if (unitarity_error(ideal) > 1e-8) throw std::invalid_argument("ideal gate is not unitary");
}

}  // namespace

FidelityResult average_gate_fidelity(const Eigen::MatrixXcd& ideal, const QuantumChannel& ch) {
  const auto& comp = ch.computational();
  const int d = static_cast<int>(comp.size());
  check_ideal(ideal, d);
  const auto basis = basis_for(d);

  std::vector<Eigen::MatrixXcd> inputs;
  inputs.reserve(basis.size());
  for (const auto& b : basis) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(ch.dim(), ch.dim());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) e(comp[i], comp[j]) = b(i, j);
    inputs.push_back(std::move(e));
  }
  const auto outputs = ch.apply(inputs);

  std::vector<Eigen::MatrixXcd> images;
  images.reserve(outputs.size());
  for (const auto& o : outputs) {
    Eigen::MatrixXcd p(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) p(i, j) = o(comp[i], comp[j]);
    images.push_back(std::move(p));
  }

  FidelityResult r;
  r.value = formula(ideal, basis, images);
  // Basis element 0 is the identity, whose embedding is the projector P.
  r.leakage = 1.0 - images.front().trace().real() / d;
  return r;
}

double average_gate_fidelity(const Eigen::MatrixXcd& ideal,
                             const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& block_map) {
  const int d = static_cast<int>(ideal.rows());
  check_ideal(ideal, d);
  const auto basis = basis_for(d);
  std::vector<Eigen::MatrixXcd> images;
  for (const auto& b : basis) images.push_back(block_map(b));
  return formula(ideal, basis, images);
}

}  // namespace fgqc
