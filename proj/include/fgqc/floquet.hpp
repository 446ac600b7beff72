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

// Floquet effective-Hamiltonian theory for the cos(omega t)-modulated drives.
//
// A drive H(t) = cos(omega t) F . n(t) with F = sigma / 2 and slowly rotating
// n(t) is, stroboscopically at omega * t = k * pi, generated by
//   H_eff = [1 - J0(|n| / omega)] F . (n x ndot) / |n|^2.

#include "fgqc/hilbert.hpp"
#include "fgqc/params.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace fgqc::floquet {

using Field3 = Eigen::Vector3d;

class SingularInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// J0(a) = (1/2pi) Int_0^2pi cos(a sin t) dt by the periodic trapezoid rule,
/// doubling the node count until two successive estimates agree to 1e-15.
double bessel_j0(double a);

/// Independent route: long-double power series for |a| <= 20, Hankel
/// asymptotic expansion beyond.
double bessel_j0_series(double a);

/// C = -(N / 2) [1 - J0(Omega0 / omega)].
double coefficient_C(double precession, double rabi, double drive_freq);

/// Closed-form solution X(F) of dX/dF = -ndot - n x X with X(0) = 0:
///   X = -F (n.ndot) n / n^2 - sin(F n) (n x ndot) x n / n^3 - [cos(F n) - 1] (n x ndot) / n^2.
/// Throws SingularInput for |n| = 0.
Field3 x_field(double F, const Field3& n, const Field3& ndot);

/// Right-hand side of the X-field equation; x_field makes it vanish against dX/dF.
Field3 x_field_rhs(const Field3& X, const Field3& n, const Field3& ndot);

/// Target drive n(t) = Omega0 (cos Nt, -sin Nt, 0) and its time derivative.
Field3 target_field(double t, const GateParams& p);
Field3 target_field_rate(double t, const GateParams& p);

/// Control drive r(t) = Omega' (cos N1t cos phi_c, cos N1t sin phi_c, sin N1t).
Field3 control_field(double t, const GateParams& p);
Field3 control_field_rate(double t, const GateParams& p);

/// F . v with F = sigma / 2.
Op2 spin_half(const Field3& v);

/// Effective Hamiltonian on {|b>, |r>}; equals C sigma_z for the standard drive.
Op2 effective_hamiltonian_target(double t, const GateParams& p);

/// Effective Hamiltonian on {|g>, |r>} of the Floquet control drive.
Op2 effective_hamiltonian_control(double t, const GateParams& p);

/// Target-qubit gate on {|0>, |1>} after a geometric phase C*tau on the bright state.
Op2 effective_gate(double theta, double phi, double c_tau);

/// Full two-level target drive on {|b>, |r>}: cos(omega t) (Omega0/2)(cos Nt sx - sin Nt sy).
Op2 target_two_level_hamiltonian(double t, double rabi, double drive_freq, double precession);

/// Micromotion operator R(t) = exp[-i sin(omega t) F . n(t) / omega] on {|b>, |r>}.
Op2 micromotion(double t, const GateParams& p);

struct SolvedParams {
  double omega = 0.0;
  double tau = 0.0;
  double precession = 0.0;
  /// omega / |N| >= 5.
  bool adiabatic = true;
};

/// Inverts C*tau = target, omega*tau = k*pi, omega = Omega0 / ratio.
/// Throws DegenerateRatio when J0(ratio) = 1 (no geometric phase accrues).
SolvedParams solve_params(double target_c_tau, double rabi, double ratio, int periods);

}  // namespace fgqc::floquet
