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

// Target gates and the channels realized by the simulated protocols.

#include "fgqc/hilbert.hpp"
#include "fgqc/params.hpp"
#include "fgqc/propagate.hpp"

#include <string>

namespace fgqc {

struct IdealGate {
  Op4 matrix;
  std::string name;
};

/// |0><0| (x) I + |1><1| (x) U with U = floquet::effective_gate(theta, phi, c_tau).
IdealGate ideal_controlled(double theta, double phi, double c_tau);
IdealGate cnot();
IdealGate controlled_t();
/// The gate the parameters are tuned for (theta, phi, target C*tau).
IdealGate ideal_for(const GateParams& p);

/// SWAP-like matrix diag-block form [[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,-1]].
IdealGate swap_like();

/// Effective-theory action of the baseline scheme on |00>,|01>,|10>,|11>:
///   e^{iC tau}|00><00| + e^{-iC tau}|B><B| + |D><D| + |11><11|,
/// B = sin(angle/2)|01> - cos(angle/2)|10>, D = cos(angle/2)|01> + sin(angle/2)|10>.
/// At e^{iC tau} = -1, angle = pi/2 this is -(Z (x) Z) times swap_like().
IdealGate original_fgqc_ideal(double angle, double c_tau);

/// Three-step channel on the 9-dim space under `n`.
QuantumChannel realized_channel(const GateParams& p, const NoiseModel& n, const IntegratorConfig& cfg);

/// Baseline channel on the 4-dim two-two-level-atom space with Rabi error delta.
/// In finite-blockade mode the lab-frame propagator is returned in the frame
/// rotating with V|11><11|, i.e. multiplied by exp(+i V tau |11><11|).
QuantumChannel original_fgqc_channel(const OriginalParams& p, double delta, const IntegratorConfig& cfg);

/// Convenience form with explicit drive parameters; tau = k pi / omega.
QuantumChannel original_fgqc_channel(double rabi, double drive_freq, double precession, double angle,
                                     double interaction, int periods, double delta, const IntegratorConfig& cfg,
                                     BlockadeModel blockade = BlockadeModel::Finite);

}  // namespace fgqc
