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
#include "fgqc/propagate.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fgqc;
using floquet::Field3;

namespace {
constexpr double kPi = std::numbers::pi;

Op2 sx() { return (Op2() << 0, 1, 1, 0).finished(); }
Op2 sy() { return (Op2() << 0, -kI, kI, 0).finished(); }
Op2 sz() { return (Op2() << 1, 0, 0, -1).finished(); }

// Midpoint-rule product of exact exponentials; second order, independent of
// the library's Magnus step.
Op2 midpoint_propagator(const std::function<Op2(double)>& h, double duration, int steps) {
  Op2 u = Op2::Identity();
  const double dt = duration / steps;
  for (int k = 0; k < steps; ++k) u = oracle::expm_hermitian(h((k + 0.5) * dt), dt) * u;
  return u;
}

double strobe_error(double ratio, double target, int periods, double dt) {
  const double rabi = 4.0 * kPi;
  const auto s = floquet::solve_params(target, rabi, ratio, periods);
  BasicSchedule<2> sched;
  sched.segments.push_back(
      {s.tau, [&](double t) { return floquet::target_two_level_hamiltonian(t, rabi, s.omega, s.precession); }, "t"});
  sched.max_rate = rabi;
  const Op2 u = evolve_unitary(sched, IntegratorConfig{dt, 1e-6});
  const double c = floquet::coefficient_C(s.precession, rabi, s.omega);
  const Op2 ueff = oracle::expm_hermitian(Op2(c * sz()), s.tau);
  return (u - ueff).operatorNorm();
}
}  // namespace

TEST_CASE("J0 reference values") {
  CHECK(floquet::bessel_j0(0.0) == 1.0);
  CHECK(std::abs(floquet::bessel_j0(2.40483)) < 1e-4);
  CHECK(std::abs(floquet::bessel_j0(2.404825557695773)) < 1e-14);
  CHECK(floquet::bessel_j0(3.8575) == doctest::Approx(-0.4026).epsilon(1e-4));
  CHECK(floquet::bessel_j0(-1.7) == floquet::bessel_j0(1.7));
  CHECK_THROWS(floquet::bessel_j0(std::nan("")));
}

TEST_CASE("J0 against the standard library and the series route") {
  double worst_std = 0.0, worst_series = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double a = 0.05 * i;
    worst_std = std::max(worst_std, std::abs(floquet::bessel_j0(a) - std::cyl_bessel_j(0.0, a)));
    worst_series = std::max(worst_series, std::abs(floquet::bessel_j0_series(a) - std::cyl_bessel_j(0.0, a)));
  }
  CHECK(worst_std < 1e-12);
  CHECK(worst_series < 1e-10);
}

TEST_CASE("coefficient C at the operating points") {
  CHECK(floquet::coefficient_C(0.7, 0.0, 3.0) == 0.0);
  CHECK_THROWS(floquet::coefficient_C(0.5, 1.0, 0.0));
  // Quoted CNOT numbers: N = 0.5806, omega = 3.2576, tau = 7.715.
  const double c_cnot = floquet::coefficient_C(0.5806, 4.0 * kPi, 3.2576);
  CHECK(c_cnot == doctest::Approx(-0.4072).epsilon(1e-3));
  CHECK(std::abs(c_cnot * 7.715 + kPi) <= 0.01 * kPi);
  // Quoted CT numbers: N = 1.4191, omega = 5.41, tau = 1.157.
  const double c_ct = floquet::coefficient_C(1.4191, 4.0 * kPi, 5.41);
  CHECK(std::abs(c_ct * 1.157 + kPi / 4) <= 0.01 * kPi / 4);
}

TEST_CASE("x_field closed form") {
  const Field3 n(1.0, -2.0, 0.5), nd(0.3, 0.2, -0.7);
  CHECK(floquet::x_field(0.0, n, nd).norm() == 0.0);
  CHECK(floquet::x_field(0.8, n, Field3::Zero()).norm() == 0.0);
  CHECK_THROWS_AS(floquet::x_field(0.1, Field3::Zero(), nd), floquet::SingularInput);

  // Central differences in F against the ODE on the target drive.
  const auto p = presets::operating_point(GateKind::Cnot, Scheme::DgFgqc);
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double t = i * p.tau / 10;
    const Field3 nt = floquet::target_field(t, p), ndt = floquet::target_field_rate(t, p);
    CHECK(nt.norm() == doctest::Approx(p.rabi_target));
    for (double F = -0.4; F <= 0.4; F += 0.1) {
      const double h = 1e-5;
      const Field3 d = (floquet::x_field(F + h, nt, ndt) - floquet::x_field(F - h, nt, ndt)) / (2 * h);
      const Field3 rhs = -ndt - nt.cross(floquet::x_field(F, nt, ndt));
      worst = std::max(worst, (d - rhs).norm());
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("target effective Hamiltonian") {
  auto p = presets::operating_point(GateKind::Cnot, Scheme::DgFgqc);
  const double c = floquet::coefficient_C(p.precession, p.rabi_target, p.drive_freq);
  CHECK(c == doctest::Approx(-0.4072).epsilon(1e-3));
  for (double t : {0.0, 1.3, 5.0}) {
    const Op2 h = floquet::effective_hamiltonian_target(t, p);
    CHECK((h - c * sz()).cwiseAbs().maxCoeff() < 1e-12);
  }
  Eigen::SelfAdjointEigenSolver<Op2> es(floquet::effective_hamiltonian_target(0.0, p));
  CHECK(es.eigenvalues()(0) == doctest::Approx(-std::abs(c)));
  CHECK(es.eigenvalues()(1) == doctest::Approx(std::abs(c)));
  p.precession = 0.0;
  CHECK(floquet::effective_hamiltonian_target(1.0, p).norm() == 0.0);
}

TEST_CASE("control effective Hamiltonian realizes an X gate") {
  auto p = presets::operating_point(GateKind::Cnot, Scheme::FgqcFgqc);
  const double factor = 1.0 - floquet::bessel_j0(p.rabi_control_floquet / p.control_drive_freq);
  const Op2 expected =
      factor * p.control_precession / 2 * (std::sin(p.phi_c) * sx() - std::cos(p.phi_c) * sy());
  for (double t : {0.0, 2.0, 7.0}) {
    CHECK((floquet::effective_hamiltonian_control(t, p) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  const double c1_tau = factor * p.control_precession / 2 * p.tau_control;
  CHECK(std::abs(c1_tau - kPi / 2) <= 0.01 * kPi / 2);
  const Op2 u = oracle::expm_hermitian(floquet::effective_hamiltonian_control(0.0, p), p.tau_control);
  CHECK((u - (-kI) * sx()).cwiseAbs().maxCoeff() < 0.02);

  p.control_precession = 0.0;
  CHECK(floquet::effective_hamiltonian_control(0.0, p).norm() == 0.0);
}

TEST_CASE("effective gate matrices") {
  const Op2 x = floquet::effective_gate(-kPi / 2, 0.0, -kPi);
  CHECK((x - sx()).cwiseAbs().maxCoeff() < 1e-12);
  Op2 t = Op2::Identity();
  t(1, 1) = std::exp(kI * (kPi / 4));
  CHECK((floquet::effective_gate(0.0, 0.0, -kPi / 4) - t).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((floquet::effective_gate(0.7, -1.9, 0.0) - Op2::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  // Geometric phase lands on the bright state and leaves the dark state alone.
  const double theta = 1.1, phi = 0.4, ct = 2.3;
  const Op2 u = floquet::effective_gate(theta, phi, ct);
  Vec2 b, d;
  b << std::sin(theta / 2) * std::exp(kI * phi), std::cos(theta / 2);
  d << std::cos(theta / 2) * std::exp(kI * phi), -std::sin(theta / 2);
  CHECK((u * b - std::exp(-kI * ct) * b).norm() < 1e-12);
  CHECK((u * d - d).norm() < 1e-12);
}

TEST_CASE("solve_params") {
  const auto cn = floquet::solve_params(-kPi, 4 * kPi, 3.8575, 8);
  CHECK(cn.omega == doctest::Approx(3.2576).epsilon(1e-4));
  CHECK(cn.tau == doctest::Approx(7.715).epsilon(1e-4));
  CHECK(cn.precession == doctest::Approx(0.5806).epsilon(1e-3));
  CHECK(std::abs(floquet::coefficient_C(cn.precession, 4 * kPi, cn.omega) * cn.tau + kPi) < 1e-10);
  CHECK(cn.adiabatic);

  const auto ct = floquet::solve_params(-kPi / 4, 4 * kPi, 2.3227, 2);
  CHECK(ct.omega == doctest::Approx(5.41).epsilon(0.01));
  CHECK(ct.tau == doctest::Approx(1.157).epsilon(0.01));
  CHECK(ct.precession == doctest::Approx(1.4191).epsilon(0.01));
  CHECK(std::abs(floquet::coefficient_C(ct.precession, 4 * kPi, ct.omega) * ct.tau + kPi / 4) < 1e-10);

  CHECK(floquet::solve_params(0.0, 4 * kPi, 3.0, 3).precession == 0.0);
  CHECK_THROWS_AS(floquet::solve_params(-kPi, 4 * kPi, 1e-9, 8), floquet::DegenerateRatio);
  CHECK_THROWS(floquet::solve_params(-kPi, 4 * kPi, 3.0, 0));
}

TEST_CASE("micromotion returns to identity at omega tau = k pi") {
  for (auto g : {GateKind::Cnot, GateKind::ControlledT}) {
    const auto p = presets::operating_point(g, Scheme::DgFgqc);
    CHECK((floquet::micromotion(0.0, p) - Op2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((floquet::micromotion(p.tau, p) - Op2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(unitarity_error(floquet::micromotion(0.37 * p.tau, p)) < 1e-14);
    CHECK(std::abs(std::cos(p.drive_freq * p.tau)) == doctest::Approx(1.0));
  }
}

TEST_CASE("two-level drive: library integrator against a midpoint oracle") {
  const auto s = floquet::solve_params(-kPi, 4 * kPi, 3.8575, 8);
  auto h = [&](double t) { return floquet::target_two_level_hamiltonian(t, 4 * kPi, s.omega, s.precession); };
  BasicSchedule<2> sched;
  sched.segments.push_back({s.tau, h, "drive"});
  sched.max_rate = 4 * kPi;
  const Op2 lib = evolve_unitary(sched, IntegratorConfig{});
  const Op2 ref = midpoint_propagator(h, s.tau, 400000);
  CHECK((lib - ref).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("stroboscopic agreement with the effective Hamiltonian") {
  const double e8 = strobe_error(3.8575, -kPi, 8, 2e-4);
  const double e16 = strobe_error(3.8575, -kPi, 16, 2e-4);
  CHECK(e8 <= 5e-2);
  CHECK(e16 < e8);
  MESSAGE("error at k=8: " << e8 << ", k=16: " << e16 << ", ratio " << e8 / e16);
}
