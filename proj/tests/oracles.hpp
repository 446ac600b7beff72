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

// Independent reference computations used only by the tests.

#include "fgqc/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using fgqc::cplx;

/// exp(-i H t) for Hermitian H through its eigendecomposition.
template <class M>
M expm_hermitian(const M& h, double t) {
  Eigen::SelfAdjointEigenSolver<M> es(h);
  const auto phases = es.eigenvalues().unaryExpr([t](double l) { return std::exp(cplx(0.0, -l * t)); });
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

template <int Dim>
fgqc::OpD<Dim> random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> nd;
  fgqc::OpD<Dim> a;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  return scale * 0.5 * (a + a.adjoint());
}

template <int Dim>
fgqc::OpD<Dim> random_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  fgqc::OpD<Dim> a;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  return a;
}

template <int Dim>
fgqc::OpD<Dim> random_unitary(std::mt19937_64& rng) {
  Eigen::HouseholderQR<fgqc::OpD<Dim>> qr(random_matrix<Dim>(rng));
  return qr.householderQ();
}

/// Classical fourth-order Runge-Kutta on the master equation in the standard
/// form -i[H, rho] + sum L rho L^dag - 1/2 {L^dag L, rho}.
inline fgqc::Op9 rk4_lindblad(const std::function<fgqc::Op9(double)>& h, const std::vector<fgqc::Op9>& jumps,
                              fgqc::Op9 rho, double duration, int steps) {
  auto rhs = [&](double t, const fgqc::Op9& r) {
    const fgqc::Op9 ht = h(t);
    fgqc::Op9 d = cplx(0.0, -1.0) * (ht * r - r * ht);
    for (const auto& l : jumps) {
      const fgqc::Op9 ldl = l.adjoint() * l;
      d += l * r * l.adjoint() - 0.5 * (ldl * r + r * ldl);
    }
    return d;
  };
  const double dt = duration / steps;
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const fgqc::Op9 k1 = rhs(t, rho);
    const fgqc::Op9 k2 = rhs(t + dt / 2, rho + dt / 2 * k1);
    const fgqc::Op9 k3 = rhs(t + dt / 2, rho + dt / 2 * k2);
    const fgqc::Op9 k4 = rhs(t + dt, rho + dt * k3);
    rho += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

}  // namespace oracle
