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

#include "fgqc/gates.hpp"

#include "fgqc/floquet.hpp"
#include "fgqc/pulses.hpp"

#include <cmath>
#include <numbers>

namespace fgqc {

IdealGate ideal_controlled(double theta, double phi, double c_tau) {
  IdealGate g;
  g.matrix = Op4::Zero();
  g.matrix.block<2, 2>(0, 0) = Op2::Identity();
  g.matrix.block<2, 2>(2, 2) = floquet::effective_gate(theta, phi, c_tau);
  g.name = "controlled-U";
  return g;
}

IdealGate cnot() {
  IdealGate g;
  g.matrix << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  g.name = "cnot";
  return g;
}

IdealGate controlled_t() {
  IdealGate g;
  g.matrix = Op4::Identity();
  g.matrix(3, 3) = std::exp(kI * std::numbers::pi / 4.0);
  g.name = "ct";
  return g;
}

IdealGate ideal_for(const GateParams& p) {
  IdealGate g = ideal_controlled(p.theta, p.phi, p.target_phase);
  g.name = std::string(to_string(p.gate));
  return g;
}

IdealGate swap_like() {
  IdealGate g;
  g.matrix << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1;
  g.name = "swap-like";
  return g;
}

IdealGate original_fgqc_ideal(double angle, double c_tau) {
  Vec4 b = Vec4::Zero(), d = Vec4::Zero();
  b(1) = std::sin(angle / 2.0);
  b(2) = -std::cos(angle / 2.0);
  d(1) = std::cos(angle / 2.0);
  d(2) = std::sin(angle / 2.0);
  IdealGate g;
  g.matrix = Op4::Zero();
  g.matrix(0, 0) = std::exp(kI * c_tau);
  g.matrix(3, 3) = 1.0;
  g.matrix += std::exp(-kI * c_tau) * b * b.adjoint() + d * d.adjoint();
  g.name = "original-fgqc";
  return g;
}

QuantumChannel realized_channel(const GateParams& p, const NoiseModel& n, const IntegratorConfig& cfg) {
  const std::string label = std::string(to_string(p.gate)) + "/" + std::string(to_string(p.scheme));
  return QuantumChannel::from_schedule(schedule(p, n), n, cfg, label);
}

QuantumChannel original_fgqc_channel(const OriginalParams& p, double delta, const IntegratorConfig& cfg) {
  const Schedule4 s = original_schedule(p, delta);
  check_step_size(s, cfg);
  auto make = [s, p, cfg]() {
    Op4 w = evolve_unitary(s, cfg);
    if (p.blockade == BlockadeModel::Finite) w.row(3) *= std::exp(kI * p.interaction * p.tau);
    return Eigen::MatrixXcd(w);
  };
  return QuantumChannel::from_unitary(make, 4, {0, 1, 2, 3}, "original-fgqc");
}

QuantumChannel original_fgqc_channel(double rabi, double drive_freq, double precession, double angle,
                                     double interaction, int periods, double delta, const IntegratorConfig& cfg,
                                     BlockadeModel blockade) {
  OriginalParams p;
  p.blockade = blockade;
  p.rabi = rabi;
  p.drive_freq = drive_freq;
  p.precession = precession;
  p.angle = angle;
  p.interaction = interaction;
  p.periods = periods;
  p.tau = periods * std::numbers::pi / drive_freq;
  p.target_phase = floquet::coefficient_C(precession, rabi, drive_freq) * p.tau;
  return original_fgqc_channel(p, delta, cfg);
}

}  // namespace fgqc
