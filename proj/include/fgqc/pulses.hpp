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

// Time-dependent Hamiltonians of the three-step protocol and the baseline scheme.

#include "fgqc/hilbert.hpp"
#include "fgqc/params.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fgqc {

template <int Dim>
struct BasicSegment {
  double duration = 0.0;
  std::function<OpD<Dim>(double)> hamiltonian;  // local time in [0, duration]
  std::string label;
};

/// Ordered piecewise Hamiltonian. `max_rate` is the fastest angular frequency
/// present (rad/us); the integrator requires dt * max_rate <= 0.1.
template <int Dim>
struct BasicSchedule {
  std::vector<BasicSegment<Dim>> segments;
  double max_rate = 0.0;

  double total_time() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
  }

  void validate() const {
    if (segments.empty()) throw std::invalid_argument("schedule has no segments");
    for (const auto& s : segments) {
      if (!(s.duration > 0.0)) throw std::invalid_argument("segment '" + s.label + "' has non-positive duration");
      if (!s.hamiltonian) throw std::invalid_argument("segment '" + s.label + "' has no Hamiltonian");
    }
  }
};

using PulseSchedule = BasicSchedule<9>;
using Schedule4 = BasicSchedule<4>;

/// |b> = sin(theta/2) e^{i phi}|0> + cos(theta/2)|1>, |d> = cos(theta/2) e^{i phi}|0> - sin(theta/2)|1>.
std::pair<Vec2, Vec2> bright_dark(double theta, double phi);

/// Control-atom pulse. DG: constant sign*(1+delta)(Omega1/2)(|g><r| + h.c.).
/// FGQC: cos(omega1 t)[(Delta1/2) sz + sign (Omega1(t)/2)(cos phi_c sx + sin phi_c sy)] on {g, r}.
/// Step 3 is this pulse with sign = -1.
Op9 step1_hamiltonian(double t, const GateParams& p, const NoiseModel& n, int sign = +1);

/// Target-atom Floquet drive, conditioned on the control by the blockade model.
Op9 step2_hamiltonian(double t, const GateParams& p, const NoiseModel& n);

/// Single-atom target drive h(t) on {g, e, r}.
Op3 target_drive(double t, const GateParams& p, const NoiseModel& n);

/// Three segments (step 1, step 2, step 3). Validates `p` first.
PulseSchedule schedule(const GateParams& p, const NoiseModel& n);

/// Lab-frame baseline Hamiltonian on two two-level atoms, basis |00>,|01>,|10>,|11>:
///   H = (1+delta)[Omega_1(t)|1><0| (x) I + I (x) Omega_2(t)|1><0| + h.c.] + V|11><11|
/// with Omega_1 = -Omega_R cos(angle/2), Omega_2 = Omega_R sin(angle/2),
/// Omega_R = (Omega0/2) cos(omega t) e^{iNt}.
Op4 original_fgqc_hamiltonian(double t, double rabi, double drive_freq, double precession, double angle,
                              double interaction, double delta);

/// Baseline Hamiltonian under the chosen blockade model. Ideal drops V and
/// removes every coupling into |11>.
Op4 original_fgqc_hamiltonian(double t, const OriginalParams& p, double delta);

Schedule4 original_schedule(const OriginalParams& p, double delta);

}  // namespace fgqc
