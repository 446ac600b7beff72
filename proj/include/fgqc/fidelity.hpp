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

// Average gate fidelity over a Pauli operator basis:
//   F = [sum_j tr(U U_j^dag U^dag eps(U_j)) + d^2] / [d^2 (d + 1)].

#include "fgqc/hilbert.hpp"
#include "fgqc/propagate.hpp"

#include <vector>

namespace fgqc {

/// sigma_a (x) sigma_b at index 4a + b, sigma_0 = I, then x, y, z; atom 1 left.
std::vector<Op4> pauli_basis2();
/// I, sigma_x, sigma_y, sigma_z.
std::vector<Op2> pauli_basis1();

struct FidelityResult {
  double value = 0.0;
  /// 1 - tr(P eps(P)) / d with P the computational projector; weight lost to
  /// levels outside the qubit block.
  double leakage = 0.0;
};

/// Embeds every basis operator at ch.computational(), applies the channel,
/// projects back and evaluates the formula. d = ch.computational().size(),
/// which must be 2 or 4. The sum is taken in basis order.
FidelityResult average_gate_fidelity(const Eigen::MatrixXcd& ideal, const QuantumChannel& ch);

/// Same formula for a map given directly on the d x d block.
double average_gate_fidelity(const Eigen::MatrixXcd& ideal,
                             const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& block_map);

}  // namespace fgqc
