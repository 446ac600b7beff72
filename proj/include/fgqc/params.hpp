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

// Gate and noise parameters. Frequencies are angular, in rad/us; times in us.
// A value quoted as "x * 2pi MHz" is stored as 2*pi*x rad/us.

#include "fgqc/hilbert.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgqc {

enum class Scheme { DgFgqc, FgqcFgqc };
enum class GateKind { Cnot, ControlledT, Custom };

/// How the Rydberg-Rydberg interaction enters step 2.
///  Ideal:  V -> infinity; the target drive acts only while the control is in
///          g or e, and |rr> is never populated.
///  Finite: explicit V|rr><rr| with the target drive acting on every control level.
enum class BlockadeModel { Ideal, Finite };

/// Jump-operator reading for the decay model.
///  Rydberg: sqrt(4G/13)|g><r| and sqrt(3G/13)|e><r| per atom.
///  Literal: sqrt(4G/13)|0><1| and sqrt(3G/13)|1><1| per atom, labels as printed.
enum class DecayChannels { Rydberg, Literal };

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GateParams {
  Scheme scheme = Scheme::DgFgqc;
  GateKind gate = GateKind::Cnot;
  BlockadeModel blockade = BlockadeModel::Ideal;

  double theta = 0.0;     // bright-state mixing angle
  double phi = 0.0;       // relative phase of the |g>-|r> target coupling
  double phi_c = 0.0;     // control transverse-field azimuth (FGQC control)

  double rabi_target = 0.0;         // Omega_0
  double rabi_control = 0.0;        // Omega_1 (DG control pulses)
  double rabi_control_floquet = 0.0;  // Omega' (FGQC control)
  double interaction = 0.0;         // V

  double drive_freq = 0.0;          // omega, target envelope cos(omega t)
  double control_drive_freq = 0.0;  // omega_1, control envelope cos(omega_1 t)
  double precession = 0.0;          // N, target phase phi_1(t) = N t
  double control_precession = 0.0;  // N_1, control field angle N_1 t

  int periods = 1;          // k in omega * tau = k * pi
  double tau = 0.0;         // step-2 duration
  double tau_control = 0.0; // tau_1, FGQC control pulse duration

  /// Target value of C*tau the parameters were solved for.
  double target_phase = 0.0;

  double step1_duration() const;
  double step2_duration() const { return tau; }
  double step3_duration() const { return step1_duration(); }
  double total_duration() const { return step1_duration() + step2_duration() + step3_duration(); }

  /// Hard invariant violations; empty when the parameters are usable.
  std::vector<std::string> violations() const;
  /// Throws InvalidParams listing every violation.
  void validate() const;
  /// omega / |N| >= 5; advisory only.
  bool adiabatic() const;
};

/// Baseline two-two-level-atom scheme: both atoms driven on |0>-|1> with a
/// shared Floquet envelope, split by the mixing angle `angle`.
struct OriginalParams {
  BlockadeModel blockade = BlockadeModel::Ideal;
  double rabi = 0.0;        // Omega_0
  double drive_freq = 0.0;  // omega
  double precession = 0.0;  // N
  double angle = 0.0;       // mixing angle of the two single-atom couplings
  double interaction = 0.0; // V
  int periods = 1;
  double tau = 0.0;
  double target_phase = 0.0;

  std::vector<std::string> violations() const;
  void validate() const;
};

struct NoiseModel {
  double rabi_error = 0.0;       // delta
  double detuning_error = 0.0;   // delta'
  double decay_rate = 0.0;       // Gamma, 1/us
  std::vector<Op9> jumps;

  static NoiseModel none() { return {}; }
  static NoiseModel rabi(double delta);
  static NoiseModel detuning(double delta_prime);
  /// Sets Gamma and builds the four jump operators for the two atoms.
  NoiseModel& with_decay(double gamma, DecayChannels kind = DecayChannels::Rydberg);

  void validate() const;
};

std::vector<Op9> decay_jump_operators(double gamma, DecayChannels kind);

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Standard operating points.
namespace presets {

inline constexpr double kRabi = 2.0 * kTwoPi;          // 2 x 2pi MHz
inline constexpr double kInteractionRatio = 20.0;      // V = 20 Omega_0
inline constexpr double kCnotRatio = 3.8575;           // Omega_0 / omega
inline constexpr int kCnotPeriods = 8;
inline constexpr double kCtRatio = 2.3227;
inline constexpr int kCtPeriods = 2;
inline constexpr double kControlDriveFreq = 0.5133 * kTwoPi;
inline constexpr double kControlPrecession = 45.728e-3 * kTwoPi;
inline constexpr double kControlDuration = 7.797;
inline constexpr double kDecayRate = 2.48e-3;          // 2.48 kHz in 1/us

GateParams operating_point(GateKind gate, Scheme scheme, BlockadeModel blockade = BlockadeModel::Ideal);
/// SWAP-like baseline at e^{iC tau} = -1, angle pi/2, on the CNOT drive ratio.
OriginalParams baseline(BlockadeModel blockade = BlockadeModel::Ideal);

}  // namespace presets

std::string_view to_string(Scheme s);
std::string_view to_string(GateKind g);
std::string_view to_string(BlockadeModel b);
std::string_view to_string(DecayChannels d);
Scheme parse_scheme(std::string_view s);
GateKind parse_gate(std::string_view s);
BlockadeModel parse_blockade(std::string_view s);
DecayChannels parse_decay_channels(std::string_view s);

}  // namespace fgqc
