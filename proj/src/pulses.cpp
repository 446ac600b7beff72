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

#include "fgqc/pulses.hpp"

#include <algorithm>
#include <cmath>

namespace fgqc {

namespace {

// Pauli matrices on the control's {g, r} pair, |0> = g, |1> = r.
Op3 control_sx() { return transition(Level::g, Level::r) + transition(Level::r, Level::g); }
Op3 control_sy() { return -kI * transition(Level::g, Level::r) + kI * transition(Level::r, Level::g); }
Op3 control_sz() { return transition(Level::g, Level::g) - transition(Level::r, Level::r); }

Op3 ground_projector() { return transition(Level::g, Level::g) + transition(Level::e, Level::e); }

}  // namespace

std::pair<Vec2, Vec2> bright_dark(double theta, double phi) {
  const cplx ph = std::exp(kI * phi);
  const double s = std::sin(theta / 2.0), c = std::cos(theta / 2.0);
  Vec2 b, d;
  b << s * ph, c;
  d << c * ph, -s;
  return {b, d};
}

Op9 step1_hamiltonian(double t, const GateParams& p, const NoiseModel& n, int sign) {
  const double sg = sign >= 0 ? 1.0 : -1.0;
  Op3 h;
  if (p.scheme == Scheme::DgFgqc) {
    h = sg * (1.0 + n.rabi_error) * 0.5 * p.rabi_control * control_sx();
  } else {
    const double f1 = std::cos(p.control_drive_freq * t);
    const double a = p.control_precession * t;
    const double detuning = (1.0 + n.detuning_error) * std::sin(a) * p.rabi_control_floquet;
    const double rabi = (1.0 + n.rabi_error) * std::cos(a) * p.rabi_control_floquet;
    h = f1 * (0.5 * detuning * control_sz() +
              sg * 0.5 * rabi * (std::cos(p.phi_c) * control_sx() + std::sin(p.phi_c) * control_sy()));
  }
  return tensor(h, Op3::Identity());
}

Op3 target_drive(double t, const GateParams& p, const NoiseModel& n) {
  const double phase1 = p.precession * t;
  const double phase0 = phase1 + p.phi;
  const double amp = (1.0 + n.rabi_error) * std::cos(p.drive_freq * t) * 0.5 * p.rabi_target;
  const Op3 a = amp * (std::sin(p.theta / 2.0) * std::exp(kI * phase0) * transition(Level::g, Level::r) +
                       std::cos(p.theta / 2.0) * std::exp(kI * phase1) * transition(Level::e, Level::r));
  return a + a.adjoint();
}

Op9 step2_hamiltonian(double t, const GateParams& p, const NoiseModel& n) {
  const Op3 h = target_drive(t, p, n);
  if (p.blockade == BlockadeModel::Ideal) return tensor(ground_projector(), h);
  Op9 out = tensor(Op3::Identity(), h);
  out(8, 8) += p.interaction;
  return out;
}

PulseSchedule schedule(const GateParams& p, const NoiseModel& n) {
  p.validate();
  n.validate();
  PulseSchedule s;
  const double t1 = p.step1_duration();
  s.segments.push_back({t1, [p, n](double t) { return step1_hamiltonian(t, p, n, +1); }, "step1"});
  s.segments.push_back({p.tau, [p, n](double t) { return step2_hamiltonian(t, p, n); }, "step2"});
  s.segments.push_back({t1, [p, n](double t) { return step1_hamiltonian(t, p, n, -1); }, "step3"});

  const double amp = 1.0 + std::abs(n.rabi_error);
  double rate = std::max({amp * p.rabi_target, p.drive_freq, std::abs(p.precession)});
  if (p.blockade == BlockadeModel::Finite) rate = std::max(rate, p.interaction);
  if (p.scheme == Scheme::DgFgqc) {
    rate = std::max(rate, amp * p.rabi_control);
  } else {
    const double damp = 1.0 + std::abs(n.detuning_error);
    rate = std::max({rate, std::max(amp, damp) * p.rabi_control_floquet, p.control_drive_freq,
                     std::abs(p.control_precession)});
  }
  s.max_rate = rate;
  return s;
}

Op4 original_fgqc_hamiltonian(double t, double rabi, double drive_freq, double precession, double angle,
                              double interaction, double delta) {
  const cplx omega_r = 0.5 * rabi * std::cos(drive_freq * t) * std::exp(kI * precession * t);
  const cplx o1 = -(1.0 + delta) * omega_r * std::cos(angle / 2.0);
  const cplx o2 = (1.0 + delta) * omega_r * std::sin(angle / 2.0);
  Op2 raise = Op2::Zero();  // |1><0|
  raise(1, 0) = 1.0;
  const Op2 h1 = o1 * raise + std::conj(o1) * raise.adjoint();
  const Op2 h2 = o2 * raise + std::conj(o2) * raise.adjoint();
  Op4 h = Op4::Zero();
  // Kronecker products with atom 1 as the left factor.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      h.block<2, 2>(2 * a, 2 * b) += h1(a, b) * Op2::Identity();
      if (a == b) h.block<2, 2>(2 * a, 2 * b) += h2;
    }
  h(3, 3) += interaction;
  return h;
}

Op4 original_fgqc_hamiltonian(double t, const OriginalParams& p, double delta) {
  if (p.blockade == BlockadeModel::Finite)
    return original_fgqc_hamiltonian(t, p.rabi, p.drive_freq, p.precession, p.angle, p.interaction, delta);
  Op4 h = original_fgqc_hamiltonian(t, p.rabi, p.drive_freq, p.precession, p.angle, 0.0, delta);
  h.row(3).setZero();
  h.col(3).setZero();
  return h;
}

Schedule4 original_schedule(const OriginalParams& p, double delta) {
  p.validate();
  Schedule4 s;
  s.segments.push_back({p.tau, [p, delta](double t) { return original_fgqc_hamiltonian(t, p, delta); }, "baseline"});
  s.max_rate = std::max({(1.0 + std::abs(delta)) * p.rabi, p.drive_freq, std::abs(p.precession)});
  if (p.blockade == BlockadeModel::Finite) s.max_rate = std::max(s.max_rate, p.interaction);
  return s;
}

}  // namespace fgqc
