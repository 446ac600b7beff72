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

#include "fgqc/floquet.hpp"

#include <cmath>
#include <numbers>

namespace fgqc::floquet {

namespace {

constexpr double kPi = std::numbers::pi;

Op2 sigma_x() { return (Op2() << 0, 1, 1, 0).finished(); }
Op2 sigma_y() { return (Op2() << 0, -kI, kI, 0).finished(); }
Op2 sigma_z() { return (Op2() << 1, 0, 0, -1).finished(); }

// Hankel expansion J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)] with
// b_k = prod_{j<=k} -(2j-1)^2 / (8 j x), P = b0 - b2 + b4 - ..., Q = b1 - b3 + ...
long double hankel_j0(long double x) {
  long double p = 1.0L, q = 0.0L;
  long double b = 1.0L;
  for (int k = 1; k < 80; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    const long double next = b * (-odd * odd) / (8.0L * k * x);
    if (std::fabs(next) >= std::fabs(b)) break;  // divergent tail
    b = next;
    const long double sign = (k / 2) % 2 == 0 ? 1.0L : -1.0L;
    (k % 2 == 0 ? p : q) += sign * b;
    if (std::fabs(b) < 1e-24L) break;
  }
  const long double phase = x - std::numbers::pi_v<long double> / 4.0L;
  return std::sqrt(2.0L / (std::numbers::pi_v<long double> * x)) * (p * std::cos(phase) - q * std::sin(phase));
}

}  // namespace

double bessel_j0(double a) {
  if (!std::isfinite(a)) throw std::domain_error("bessel_j0: non-finite argument");
  a = std::abs(a);
  // Periodic analytic integrand: the trapezoid rule converges geometrically once
  // the node count exceeds ~|a|. Each doubling reuses the previous nodes.
  int n = 16;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += std::cos(a * std::sin(2.0 * kPi * j / n));
  double est = sum / n;
  for (int it = 0; it < 26; ++it) {
    double mid = 0.0;  // new nodes at odd multiples of pi/n
    for (int j = 0; j < n; ++j) mid += std::cos(a * std::sin(2.0 * kPi * (j + 0.5) / n));
    sum += mid;
    n *= 2;
    const double next = sum / n;
    if (std::abs(next - est) < 1e-15 && n > 2.0 * a + 16.0) return next;
    est = next;
  }
  return est;
}

double bessel_j0_series(double a) {
  if (!std::isfinite(a)) throw std::domain_error("bessel_j0_series: non-finite argument");
  const long double x = std::fabs(static_cast<long double>(a));
  if (x > 20.0L) return static_cast<double>(hankel_j0(x));
  const long double q = -(x * x) / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-24L * std::fmax(1.0L, std::fabs(sum)) && k > x) break;
  }
  return static_cast<double>(sum);
}

double coefficient_C(double precession, double rabi, double drive_freq) {
  if (!(drive_freq > 0.0)) throw std::domain_error("coefficient_C: omega must be > 0");
  return -0.5 * precession * (1.0 - bessel_j0(rabi / drive_freq));
}

Field3 x_field(double F, const Field3& n, const Field3& ndot) {
  const double nn = n.norm();
  if (!(nn > 0.0)) throw SingularInput("x_field: |n| must be > 0");
  const Field3 u = n.cross(ndot);
  return -F * n.dot(ndot) * n / (nn * nn) - std::sin(F * nn) * u.cross(n) / (nn * nn * nn) -
         (std::cos(F * nn) - 1.0) * u / (nn * nn);
}

Field3 x_field_rhs(const Field3& X, const Field3& n, const Field3& ndot) { return -ndot - n.cross(X); }

Field3 target_field(double t, const GateParams& p) {
  const double a = p.precession * t;
  return p.rabi_target * Field3(std::cos(a), -std::sin(a), 0.0);
}

Field3 target_field_rate(double t, const GateParams& p) {
  const double a = p.precession * t;
  return p.rabi_target * p.precession * Field3(-std::sin(a), -std::cos(a), 0.0);
}

Field3 control_field(double t, const GateParams& p) {
  const double a = p.control_precession * t;
  return p.rabi_control_floquet *
         Field3(std::cos(a) * std::cos(p.phi_c), std::cos(a) * std::sin(p.phi_c), std::sin(a));
}

Field3 control_field_rate(double t, const GateParams& p) {
  const double a = p.control_precession * t;
  return p.rabi_control_floquet * p.control_precession *
         Field3(-std::sin(a) * std::cos(p.phi_c), -std::sin(a) * std::sin(p.phi_c), std::cos(a));
}

Op2 spin_half(const Field3& v) { return 0.5 * (v.x() * sigma_x() + v.y() * sigma_y() + v.z() * sigma_z()); }

Op2 effective_hamiltonian_target(double t, const GateParams& p) {
  const Field3 n = target_field(t, p);
  const double n2 = p.rabi_target * p.rabi_target;
  const double factor = 1.0 - bessel_j0(p.rabi_target / p.drive_freq);
  return factor * spin_half(n.cross(target_field_rate(t, p))) / n2;
}

Op2 effective_hamiltonian_control(double t, const GateParams& p) {
  const Field3 r = control_field(t, p);
  const double r2 = p.rabi_control_floquet * p.rabi_control_floquet;
  const double factor = 1.0 - bessel_j0(p.rabi_control_floquet / p.control_drive_freq);
  return factor * spin_half(r.cross(control_field_rate(t, p))) / r2;
}

Op2 effective_gate(double theta, double phi, double c_tau) {
  const cplx ph = std::exp(-kI * c_tau);
  const double s2 = std::sin(theta / 2.0), c2 = std::cos(theta / 2.0);
  Op2 u;
  u(0, 0) = ph * s2 * s2 + c2 * c2;
  u(0, 1) = (ph - 1.0) * std::sin(theta) * std::exp(kI * phi) / 2.0;
  u(1, 0) = (ph - 1.0) * std::sin(theta) * std::exp(-kI * phi) / 2.0;
  u(1, 1) = ph * c2 * c2 + s2 * s2;
  return u;
}

Op2 target_two_level_hamiltonian(double t, double rabi, double drive_freq, double precession) {
  const double a = precession * t;
  return std::cos(drive_freq * t) * 0.5 * rabi * (std::cos(a) * sigma_x() - std::sin(a) * sigma_y());
}

Op2 micromotion(double t, const GateParams& p) {
  // exp(-i phi v.sigma) = cos(phi |v|) - i sin(phi |v|) v.sigma / |v|, with F = sigma/2.
  const Field3 n = target_field(t, p);
  const double nn = n.norm();
  const double angle = 0.5 * std::sin(p.drive_freq * t) * nn / p.drive_freq;
  if (nn == 0.0) return Op2::Identity();
  return std::cos(angle) * Op2::Identity() - kI * std::sin(angle) * (2.0 * spin_half(n / nn));
}

SolvedParams solve_params(double target_c_tau, double rabi, double ratio, int periods) {
  if (!std::isfinite(target_c_tau)) throw std::invalid_argument("solve_params: target C*tau must be finite");
  if (!(rabi > 0.0) || !(ratio > 0.0)) throw std::invalid_argument("solve_params: Omega0 and ratio must be > 0");
  if (periods < 1) throw std::invalid_argument("solve_params: k must be >= 1");
  const double one_minus_j0 = 1.0 - bessel_j0(ratio);
  if (std::abs(one_minus_j0) < 1e-12)
    throw DegenerateRatio("solve_params: J0(ratio) = 1, no geometric phase accrues");
  SolvedParams s;
  s.omega = rabi / ratio;
  s.tau = periods * kPi / s.omega;
  s.precession = -2.0 * target_c_tau / (s.tau * one_minus_j0);
  s.adiabatic = s.precession == 0.0 || s.omega / std::abs(s.precession) >= 5.0;
  return s;
}

}  // namespace fgqc::floquet
