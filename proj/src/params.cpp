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

#include "fgqc/params.hpp"

#include "fgqc/floquet.hpp"

#include <cmath>
#include <sstream>

namespace fgqc {

namespace {
constexpr double kPi = std::numbers::pi;

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
}  // namespace

double GateParams::step1_duration() const {
  return scheme == Scheme::DgFgqc ? kPi / rabi_control : tau_control;
}

std::vector<std::string> GateParams::violations() const {
  std::vector<std::string> out;
  auto need_positive = [&](double x, const char* name) {
    if (!positive(x)) out.push_back(std::string(name) + " must be finite and > 0");
  };
  need_positive(rabi_target, "Omega0");
  need_positive(drive_freq, "omega");
  need_positive(tau, "tau");
  need_positive(interaction, "V");
  if (periods < 1) out.push_back("k must be a positive integer");
  if (!std::isfinite(precession)) out.push_back("N must be finite");
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(phi_c))
    out.push_back("angles must be finite");

  if (positive(drive_freq) && positive(tau) && periods >= 1) {
    const double kpi = periods * kPi;
    if (std::abs(drive_freq * tau - kpi) > 0.02 * kpi) {
      std::ostringstream os;
      os << "omega*tau = " << drive_freq * tau << " is not within 2% of k*pi = " << kpi;
      out.push_back(os.str());
    }
  }
  if (positive(interaction) && positive(rabi_target) && interaction / rabi_target < 10.0)
    out.push_back("V/Omega0 must be >= 10 for the blockade regime");

  if (scheme == Scheme::DgFgqc) {
    need_positive(rabi_control, "Omega1");
  } else {
    need_positive(rabi_control_floquet, "Omega'");
    need_positive(control_drive_freq, "omega1");
    need_positive(tau_control, "tau1");
    if (!std::isfinite(control_precession)) out.push_back("N1 must be finite");
  }
  return out;
}

void GateParams::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::string msg = "invalid gate parameters:";
  for (const auto& s : v) msg += "\n  - " + s;
  throw InvalidParams(msg);
}

bool GateParams::adiabatic() const {
  return precession == 0.0 || drive_freq / std::abs(precession) >= 5.0;
}

std::vector<std::string> OriginalParams::violations() const {
  std::vector<std::string> out;
  if (!positive(rabi)) out.push_back("Omega0 must be finite and > 0");
  if (!positive(drive_freq)) out.push_back("omega must be finite and > 0");
  if (!positive(tau)) out.push_back("tau must be finite and > 0");
  if (!positive(interaction)) out.push_back("V must be finite and > 0");
  if (periods < 1) out.push_back("k must be a positive integer");
  if (!std::isfinite(precession) || !std::isfinite(angle)) out.push_back("N and angle must be finite");
  if (out.empty() && std::abs(drive_freq * tau - periods * kPi) > 0.02 * periods * kPi)
    out.push_back("omega*tau is not within 2% of k*pi");
  if (out.empty() && interaction / rabi < 10.0) out.push_back("V/Omega0 must be >= 10 for the blockade regime");
  return out;
}

void OriginalParams::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::string msg = "invalid baseline parameters:";
  for (const auto& s : v) msg += "\n  - " + s;
  throw InvalidParams(msg);
}

NoiseModel NoiseModel::rabi(double delta) {
  NoiseModel n;
  n.rabi_error = delta;
  return n;
}

NoiseModel NoiseModel::detuning(double delta_prime) {
  NoiseModel n;
  n.detuning_error = delta_prime;
  return n;
}

NoiseModel& NoiseModel::with_decay(double gamma, DecayChannels kind) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("decay rate must be >= 0");
  decay_rate = gamma;
  jumps = decay_jump_operators(gamma, kind);
  return *this;
}

void NoiseModel::validate() const {
  if (!(decay_rate >= 0.0)) throw std::invalid_argument("decay rate must be >= 0");
  if (decay_rate == 0.0 && !jumps.empty())
    throw std::invalid_argument("jump operators given with zero decay rate");
  if (!std::isfinite(rabi_error) || !std::isfinite(detuning_error))
    throw std::invalid_argument("noise parameters must be finite");
}

std::vector<Op9> decay_jump_operators(double gamma, DecayChannels kind) {
  std::vector<Op9> out;
  if (gamma == 0.0) return out;
  const double a0 = std::sqrt(4.0 * gamma / 13.0);
  const double a1 = std::sqrt(3.0 * gamma / 13.0);
  const Op3 id = Op3::Identity();
  Op3 l0, l1;
  if (kind == DecayChannels::Rydberg) {
    l0 = a0 * transition(Level::g, Level::r);
    l1 = a1 * transition(Level::e, Level::r);
  } else {
    l0 = a0 * transition(Level::g, Level::e);
    l1 = a1 * transition(Level::e, Level::e);
  }
  out.push_back(tensor(l0, id));
  out.push_back(tensor(l1, id));
  out.push_back(tensor(id, l0));
  out.push_back(tensor(id, l1));
  return out;
}

namespace presets {

GateParams operating_point(GateKind gate, Scheme scheme, BlockadeModel blockade) {
  GateParams p;
  p.scheme = scheme;
  p.gate = gate;
  p.blockade = blockade;
  p.rabi_target = kRabi;
  p.rabi_control = kRabi;
  p.interaction = kInteractionRatio * kRabi;
  p.phi = 0.0;

  double ratio = 0.0;
  switch (gate) {
    case GateKind::Cnot:
      p.theta = -kPi / 2.0;
      p.target_phase = -kPi;
      ratio = kCnotRatio;
      p.periods = kCnotPeriods;
      break;
    case GateKind::ControlledT:
      p.theta = 0.0;
      p.target_phase = -kPi / 4.0;
      ratio = kCtRatio;
      p.periods = kCtPeriods;
      break;
    case GateKind::Custom:
      throw InvalidParams("no preset for a custom gate");
  }
  const auto solved = floquet::solve_params(p.target_phase, p.rabi_target, ratio, p.periods);
  p.drive_freq = solved.omega;
  p.tau = solved.tau;
  p.precession = solved.precession;

  if (scheme == Scheme::FgqcFgqc) {
    p.rabi_control_floquet = kRabi;
    p.control_drive_freq = kControlDriveFreq;
    p.control_precession = kControlPrecession;
    p.tau_control = kControlDuration;
    p.phi_c = kPi / 2.0;
  }
  return p;
}

OriginalParams baseline(BlockadeModel blockade) {
  OriginalParams p;
  p.blockade = blockade;
  p.rabi = kRabi;
  p.interaction = kInteractionRatio * kRabi;
  p.angle = kPi / 2.0;
  p.periods = kCnotPeriods;
  p.target_phase = -kPi;
  const auto solved = floquet::solve_params(p.target_phase, p.rabi, kCnotRatio, p.periods);
  p.drive_freq = solved.omega;
  p.tau = solved.tau;
  p.precession = solved.precession;
  return p;
}

}  // namespace presets

std::string_view to_string(Scheme s) { return s == Scheme::DgFgqc ? "dg-fgqc" : "fgqc-fgqc"; }

std::string_view to_string(GateKind g) {
  switch (g) {
    case GateKind::Cnot: return "cnot";
    case GateKind::ControlledT: return "ct";
    case GateKind::Custom: return "custom";
  }
  return "?";
}

std::string_view to_string(BlockadeModel b) { return b == BlockadeModel::Ideal ? "ideal" : "finite"; }

std::string_view to_string(DecayChannels d) { return d == DecayChannels::Rydberg ? "rydberg" : "literal"; }

Scheme parse_scheme(std::string_view s) {
  if (s == "dg-fgqc") return Scheme::DgFgqc;
  if (s == "fgqc-fgqc") return Scheme::FgqcFgqc;
  throw std::invalid_argument("unknown scheme '" + std::string(s) + "'");
}

GateKind parse_gate(std::string_view s) {
  if (s == "cnot") return GateKind::Cnot;
  if (s == "ct") return GateKind::ControlledT;
  throw std::invalid_argument("unknown gate '" + std::string(s) + "'");
}

BlockadeModel parse_blockade(std::string_view s) {
  if (s == "ideal") return BlockadeModel::Ideal;
  if (s == "finite") return BlockadeModel::Finite;
  throw std::invalid_argument("unknown blockade model '" + std::string(s) + "'");
}

DecayChannels parse_decay_channels(std::string_view s) {
  if (s == "rydberg") return DecayChannels::Rydberg;
  if (s == "literal") return DecayChannels::Literal;
  throw std::invalid_argument("unknown decay channel set '" + std::string(s) + "'");
}

}  // namespace fgqc
