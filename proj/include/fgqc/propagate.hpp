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

// Time evolution of piecewise Hamiltonians.
//
// Coherent part: fourth-order commutator-free Magnus step built from two
// Gauss-Legendre samples,
//   U(t+h, t) = exp(-i h (a2 H1 + a1 H2)) exp(-i h (a1 H1 + a2 H2)),
//   H_j = H(t + c_j h), c = 1/2 -+ sqrt(3)/6, a = 1/4 +- sqrt(3)/6.
// Each factor is a Hermitian exponential, so unitarity holds to round-off.
//
// Dissipative part: Strang splitting around the coherent step with the exact
// exponential of the constant dissipator superoperator.

#include "fgqc/hilbert.hpp"
#include "fgqc/params.hpp"
#include "fgqc/pulses.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgqc {

struct IntegratorConfig {
  double dt = 2e-4;         // us
  double tolerance = 1e-6;  // dt-halving target for convergence_check
};

class StepSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kMaxPhasePerStep = 0.1;

namespace detail {

inline constexpr double kGaussC1 = 0.5 - 0.28867513459481288225;  // 1/2 - sqrt(3)/6
inline constexpr double kGaussC2 = 0.5 + 0.28867513459481288225;
inline constexpr double kCfA1 = 0.25 + 0.28867513459481288225;     // 1/4 + sqrt(3)/6
inline constexpr double kCfA2 = 0.25 - 0.28867513459481288225;

inline int step_count(double duration, double dt) {
  return std::max(1, static_cast<int>(std::ceil(duration / dt - 1e-9)));
}

/// One commutator-free Magnus step from t to t + h.
template <int Dim, class Fn>
OpD<Dim> magnus_step(const Fn& hamiltonian, double t, double h) {
  const OpD<Dim> h1 = hamiltonian(t + kGaussC1 * h);
  const OpD<Dim> h2 = hamiltonian(t + kGaussC2 * h);
  const OpD<Dim> first = (cplx(0.0, -h) * (kCfA1 * h1 + kCfA2 * h2)).exp();
  const OpD<Dim> second = (cplx(0.0, -h) * (kCfA2 * h1 + kCfA1 * h2)).exp();
  return second * first;
}

}  // namespace detail

/// Throws StepSizeError when dt * max_rate exceeds kMaxPhasePerStep or dt <= 0.
template <int Dim>
void check_step_size(const BasicSchedule<Dim>& s, const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw StepSizeError("dt must be finite and > 0");
  if (cfg.dt * s.max_rate > kMaxPhasePerStep * (1.0 + 1e-12))
    throw StepSizeError("dt * max_rate = " + std::to_string(cfg.dt * s.max_rate) + " exceeds " +
                        std::to_string(kMaxPhasePerStep) + "; reduce dt below " +
                        std::to_string(kMaxPhasePerStep / s.max_rate) + " us");
}

/// Time-ordered propagator of the whole schedule.
template <int Dim>
OpD<Dim> evolve_unitary(const BasicSchedule<Dim>& s, const IntegratorConfig& cfg) {
  s.validate();
  check_step_size(s, cfg);
  OpD<Dim> u = OpD<Dim>::Identity();
  for (const auto& seg : s.segments) {
    const int n = detail::step_count(seg.duration, cfg.dt);
    const double h = seg.duration / n;
    for (int k = 0; k < n; ++k) u = detail::magnus_step<Dim>(seg.hamiltonian, k * h, h) * u;
  }
  return u;
}

/// Propagates a state vector; `observer(t, psi)` sees the state after every step
/// (t is global schedule time).
template <int Dim>
Eigen::Matrix<cplx, Dim, 1> evolve_state(
    const BasicSchedule<Dim>& s, const Eigen::Matrix<cplx, Dim, 1>& psi0, const IntegratorConfig& cfg,
    const std::function<void(double, const Eigen::Matrix<cplx, Dim, 1>&)>& observer = {}) {
  s.validate();
  check_step_size(s, cfg);
  Eigen::Matrix<cplx, Dim, 1> psi = psi0;
  double t0 = 0.0;
  for (const auto& seg : s.segments) {
    const int n = detail::step_count(seg.duration, cfg.dt);
    const double h = seg.duration / n;
    for (int k = 0; k < n; ++k) {
      psi = detail::magnus_step<Dim>(seg.hamiltonian, k * h, h) * psi;
      if (observer) observer(t0 + (k + 1) * h, psi);
    }
    t0 += seg.duration;
  }
  return psi;
}

/// Dissipator superoperator on column-major vec(rho):
///   sum_L conj(L) (x) L - 1/2 I (x) L^dag L - 1/2 (L^dag L)^T (x) I.
Eigen::MatrixXcd dissipator_superoperator(const std::vector<Op9>& jumps);

/// Propagates a batch of 9x9 operators through the master equation of the
/// schedule plus `noise.jumps`. The generator is linear, so non-Hermitian
/// inputs are allowed. With no jumps this reduces to W A W^dag.
std::vector<Op9> apply_channel_batch(const PulseSchedule& s, const NoiseModel& noise, const std::vector<Op9>& inputs,
                                     const IntegratorConfig& cfg);

Op9 apply_channel(const PulseSchedule& s, const NoiseModel& noise, const Op9& input, const IntegratorConfig& cfg);

DensityMatrix evolve_lindblad(const PulseSchedule& s, const DensityMatrix& rho0, const NoiseModel& noise,
                              const IntegratorConfig& cfg);

/// Linear map on operators of dimension `dim`, with the qubit subspace given by
/// `computational` indices. Evaluation is lazy; a unitary channel caches its
/// propagator on first use (thread safe).
class QuantumChannel {
 public:
  using BatchMap = std::function<std::vector<Eigen::MatrixXcd>(const std::vector<Eigen::MatrixXcd>&)>;

  static QuantumChannel from_schedule(PulseSchedule s, NoiseModel noise, IntegratorConfig cfg, std::string label = {});
  /// Conjugation by a fixed unitary, optionally with a lazily computed propagator.
  static QuantumChannel from_unitary(Eigen::MatrixXcd w, std::vector<int> computational, std::string label = {});
  static QuantumChannel from_unitary(std::function<Eigen::MatrixXcd()> make_w, int dim, std::vector<int> computational,
                                     std::string label = {});
  static QuantumChannel from_map(int dim, std::vector<int> computational, BatchMap map, std::string label = {});

  int dim() const { return dim_; }
  const std::vector<int>& computational() const { return computational_; }
  const std::string& label() const { return label_; }

  std::vector<Eigen::MatrixXcd> apply(const std::vector<Eigen::MatrixXcd>& inputs) const;
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& input) const;

  /// Propagator if the channel is a unitary conjugation, else empty.
  std::optional<Eigen::MatrixXcd> unitary() const;

 private:
  struct UnitaryCache {
    std::function<Eigen::MatrixXcd()> make;
    std::once_flag once;
    Eigen::MatrixXcd w;
    const Eigen::MatrixXcd& get();
  };

  int dim_ = 0;
  std::vector<int> computational_;
  std::string label_;
  BatchMap map_;
  std::shared_ptr<UnitaryCache> cache_;
};

/// Result of re-evaluating an observable at dt and dt/2.
struct ConvergenceReport {
  double dt = 0.0;
  double value = 0.0;       // at dt
  double value_half = 0.0;  // at dt / 2
  double difference = 0.0;
  bool passed = false;
};

/// Runs `observable` at cfg.dt and cfg.dt / 2. Checks the step-size invariant
/// on `s` before any propagation.
template <int Dim>
ConvergenceReport convergence_check(const BasicSchedule<Dim>& s, const IntegratorConfig& cfg,
                                    const std::function<double(const IntegratorConfig&)>& observable) {
  check_step_size(s, cfg);
  ConvergenceReport r;
  r.dt = cfg.dt;
  r.value = observable(cfg);
  IntegratorConfig half = cfg;
  half.dt = cfg.dt / 2.0;
  r.value_half = observable(half);
  r.difference = std::abs(r.value - r.value_half);
  r.passed = r.difference <= cfg.tolerance;
  return r;
}

}  // namespace fgqc
