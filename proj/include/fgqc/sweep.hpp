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

// Parameter sweeps producing fidelity tables, plus the `params` report.

#include "fgqc/params.hpp"
#include "fgqc/propagate.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fgqc {

enum class SweepScheme { DgFgqc, FgqcFgqc, Original };
enum class SweepParam { Rabi, Detuning, Decay };

std::string_view to_string(SweepScheme s);
std::string_view to_string(SweepParam p);
SweepScheme parse_sweep_scheme(std::string_view s);
SweepParam parse_sweep_param(std::string_view s);

inline constexpr const char* kCsvHeader = "gate,scheme,param,value,fidelity,leakage,runtime_ms";

/// Physics overrides on top of the presets. Unset fields keep the preset.
/// A changed Omega0, ratio or k re-solves (omega, tau, N) for the same C*tau.
struct PhysicsOverrides {
  std::map<std::string, double> values;  // keys listed by physics_override_keys()
};

const std::vector<std::string>& physics_override_keys();

struct SweepSpec {
  GateKind gate = GateKind::Cnot;
  SweepScheme scheme = SweepScheme::DgFgqc;
  SweepParam param = SweepParam::Rabi;
  double min = -0.1;
  double max = 0.1;
  int points = 41;
  double gamma = 0.0;  // fixed decay during rabi / detuning sweeps
  IntegratorConfig integrator{};
  BlockadeModel blockade = BlockadeModel::Ideal;
  DecayChannels jumps = DecayChannels::Rydberg;
  bool timing = true;  // false writes runtime_ms = 0 for byte-identical output
  int threads = 0;     // 0: hardware concurrency, capped by FGQC_THREADS
  std::string out;
  PhysicsOverrides physics;

  /// Throws std::invalid_argument with the reason.
  void validate() const;
};

struct SweepRow {
  std::string gate;
  std::string scheme;
  std::string param;
  double value = 0.0;
  double fidelity = 0.0;
  double leakage = 0.0;
  double runtime_ms = 0.0;
};

/// points values from min to max inclusive; endpoints are exact.
std::vector<double> sweep_grid(double min, double max, int points);

/// Gate parameters for `gate`/`scheme` with overrides applied and validated.
GateParams build_params(GateKind gate, Scheme scheme, BlockadeModel blockade, const PhysicsOverrides& o);
OriginalParams build_original_params(BlockadeModel blockade, const PhysicsOverrides& o);

/// Evaluates one grid point.
SweepRow evaluate_point(const SweepSpec& spec, double value);

/// Evaluates the whole grid on a worker pool. Rows come back in grid order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Worker count after applying FGQC_THREADS and the grid size.
int resolve_threads(int requested, int points);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string format_number(double x);

/// Flat key=value configuration; '#' starts a comment. Unknown keys throw.
/// Recognized sweep keys: gate, scheme, param, min, max, points, gamma, dt,
/// out, blockade, jumps, timing, threads; plus physics_override_keys().
void apply_config(SweepSpec& spec, const std::map<std::string, std::string>& kv);
std::map<std::string, std::string> read_config(const std::string& path);
std::map<std::string, std::string> parse_config(std::istream& in);

/// Solved parameter table with constraint residuals.
std::string params_report(GateKind gate, Scheme scheme, BlockadeModel blockade, const PhysicsOverrides& o = {});

}  // namespace fgqc
