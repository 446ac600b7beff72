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

// fgqc: parameter solving, invariant validation and fidelity sweeps.

#include "fgqc/sweep.hpp"
#include "fgqc/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct SweepArgs {
  std::string gate, scheme, param, out, blockade, jumps, config;
  std::optional<double> min, max, gamma, dt;
  std::optional<int> points, threads;
  bool no_timing = false;
};

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_sweep_command(const SweepArgs& a) {
  fgqc::SweepSpec spec;
  std::map<std::string, std::string> kv;
  if (!a.config.empty()) kv = fgqc::read_config(a.config);
  // Flags override the file.
  if (!a.gate.empty()) kv["gate"] = a.gate;
  if (!a.scheme.empty()) kv["scheme"] = a.scheme;
  if (!a.param.empty()) kv["param"] = a.param;
  if (!a.blockade.empty()) kv["blockade"] = a.blockade;
  if (!a.jumps.empty()) kv["jumps"] = a.jumps;
  if (!a.out.empty()) kv["out"] = a.out;
  if (a.min) kv["min"] = exact(*a.min);
  if (a.max) kv["max"] = exact(*a.max);
  if (a.points) kv["points"] = std::to_string(*a.points);
  if (a.gamma) kv["gamma"] = exact(*a.gamma);
  if (a.dt) kv["dt"] = exact(*a.dt);
  if (a.threads) kv["threads"] = std::to_string(*a.threads);
  if (a.no_timing) kv["timing"] = "false";

  // Default grids: 41 points on [-0.1, 0.1] for error sweeps, 13 on [0, 3e-3] for decay.
  if (kv.count("param") && fgqc::parse_sweep_param(kv["param"]) == fgqc::SweepParam::Decay) {
    kv.try_emplace("min", "0");
    kv.try_emplace("max", "0.003");
    kv.try_emplace("points", "13");
  }
  fgqc::apply_config(spec, kv);
  if (spec.out.empty()) throw std::invalid_argument("--out is required (use - for stdout)");

  const auto rows = fgqc::run_sweep(spec);
  if (spec.out == "-") {
    fgqc::write_csv(std::cout, rows);
  } else {
    std::ofstream f(spec.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + spec.out + "' for writing");
    fgqc::write_csv(f, rows);
    if (!f) throw std::runtime_error("write to '" + spec.out + "' failed");
    std::cerr << "wrote " << rows.size() << " rows to " << spec.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floquet geometric entangling gates on two three-level Rydberg atoms"};
  app.require_subcommand(1);

  std::string p_gate, p_scheme, p_blockade = "ideal", p_config;
  auto* params = app.add_subcommand("params", "Print solved gate parameters and constraint residuals");
  params->add_option("--gate", p_gate, "cnot | ct")->required();
  params->add_option("--scheme", p_scheme, "dg-fgqc | fgqc-fgqc")->required();
  params->add_option("--blockade", p_blockade, "ideal | finite");
  params->add_option("--config", p_config, "key=value file with physics overrides");

  SweepArgs s;
  auto* sweep = app.add_subcommand("sweep", "Average gate fidelity over a parameter grid, written as CSV");
  sweep->add_option("--gate", s.gate, "cnot | ct");
  sweep->add_option("--scheme", s.scheme, "dg-fgqc | fgqc-fgqc | original-fgqc");
  sweep->add_option("--param", s.param, "rabi | detuning | decay");
  sweep->add_option("--min", s.min, "grid start");
  sweep->add_option("--max", s.max, "grid end");
  sweep->add_option("--points", s.points, "grid size (>= 2)");
  sweep->add_option("--gamma", s.gamma, "decay rate held fixed during rabi/detuning sweeps, 1/us");
  sweep->add_option("--dt", s.dt, "integrator step, us");
  sweep->add_option("--out", s.out, "output CSV path, - for stdout");
  sweep->add_option("--blockade", s.blockade, "ideal | finite");
  sweep->add_option("--jumps", s.jumps, "rydberg | literal");
  sweep->add_option("--config", s.config, "key=value file; flags override it");
  sweep->add_option("--threads", s.threads, "worker count (FGQC_THREADS caps it)");
  sweep->add_flag("--no-timing", s.no_timing, "write runtime_ms = 0 for byte-identical output");

  std::string inject = "none";
  double v_dt = fgqc::IntegratorConfig{}.dt;
  auto* validate = app.add_subcommand("validate", "Run the invariant suite; nonzero exit on failure");
  validate->add_option("--inject", inject, "none | large-dt | non-hermitian");
  validate->add_option("--dt", v_dt, "integrator step, us");

  CLI11_PARSE(app, argc, argv);

  try {
    if (params->parsed()) {
      fgqc::PhysicsOverrides o;
      if (!p_config.empty()) {
        fgqc::SweepSpec tmp;
        fgqc::apply_config(tmp, fgqc::read_config(p_config));
        o = tmp.physics;
      }
      std::cout << fgqc::params_report(fgqc::parse_gate(p_gate), fgqc::parse_scheme(p_scheme),
                                       fgqc::parse_blockade(p_blockade), o);
      return 0;
    }
    if (sweep->parsed()) return run_sweep_command(s);
    if (validate->parsed()) {
      fgqc::ValidateOptions opts;
      opts.inject = fgqc::parse_injection(inject);
      opts.cfg.dt = v_dt;
      int failures = 0;
      fgqc::run_validation(opts, [&](const fgqc::CheckResult& r) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
        failures += r.passed ? 0 : 1;
      });
      std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
