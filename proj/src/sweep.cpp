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

#include "fgqc/sweep.hpp"

#include "fgqc/fidelity.hpp"
#include "fgqc/floquet.hpp"
#include "fgqc/gates.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace fgqc {

std::string_view to_string(SweepScheme s) {
  switch (s) {
    case SweepScheme::DgFgqc: return "dg-fgqc";
    case SweepScheme::FgqcFgqc: return "fgqc-fgqc";
    case SweepScheme::Original: return "original-fgqc";
  }
  return "?";
}

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::Rabi: return "rabi";
    case SweepParam::Detuning: return "detuning";
    case SweepParam::Decay: return "decay";
  }
  return "?";
}

SweepScheme parse_sweep_scheme(std::string_view s) {
  if (s == "original-fgqc") return SweepScheme::Original;
  return parse_scheme(s) == Scheme::DgFgqc ? SweepScheme::DgFgqc : SweepScheme::FgqcFgqc;
}

SweepParam parse_sweep_param(std::string_view s) {
  if (s == "rabi") return SweepParam::Rabi;
  if (s == "detuning") return SweepParam::Detuning;
  if (s == "decay") return SweepParam::Decay;
  throw std::invalid_argument("unknown sweep parameter '" + std::string(s) + "'");
}

const std::vector<std::string>& physics_override_keys() {
  static const std::vector<std::string> keys = {
      "rabi_target", "rabi_control", "rabi_control_floquet", "interaction", "ratio",  "periods",
      "theta",       "phi",          "phi_c",                "target_phase", "angle", "control_drive_freq",
      "control_precession", "tau_control"};
  return keys;
}

namespace {

std::optional<double> lookup(const PhysicsOverrides& o, const char* key) {
  const auto it = o.values.find(key);
  if (it == o.values.end()) return std::nullopt;
  return it->second;
}

int as_periods(double v) {
  if (v < 1.0 || v != std::floor(v)) throw std::invalid_argument("periods must be a positive integer");
  return static_cast<int>(v);
}

double default_ratio(GateKind g) { return g == GateKind::ControlledT ? presets::kCtRatio : presets::kCnotRatio; }

Scheme to_scheme(SweepScheme s) { return s == SweepScheme::FgqcFgqc ? Scheme::FgqcFgqc : Scheme::DgFgqc; }

}  // namespace

GateParams build_params(GateKind gate, Scheme scheme, BlockadeModel blockade, const PhysicsOverrides& o) {
  GateParams p = presets::operating_point(gate, scheme, blockade);
  const auto rabi = lookup(o, "rabi_target");
  const auto ratio = lookup(o, "ratio");
  const auto periods = lookup(o, "periods");
  const auto target = lookup(o, "target_phase");
  if (auto v = lookup(o, "theta")) p.theta = *v;
  if (auto v = lookup(o, "phi")) p.phi = *v;
  if (rabi) {
    p.rabi_target = *rabi;
    p.interaction = presets::kInteractionRatio * *rabi;
  }
  if (auto v = lookup(o, "interaction")) p.interaction = *v;
  if (auto v = lookup(o, "rabi_control")) p.rabi_control = *v;
  if (periods) p.periods = as_periods(*periods);
  if (target) p.target_phase = *target;
  if (rabi || ratio || periods || target) {
    const auto s = floquet::solve_params(p.target_phase, p.rabi_target, ratio.value_or(default_ratio(gate)), p.periods);
    p.drive_freq = s.omega;
    p.tau = s.tau;
    p.precession = s.precession;
  }
  if (scheme == Scheme::FgqcFgqc) {
    if (auto v = lookup(o, "rabi_control_floquet")) p.rabi_control_floquet = *v;
    if (auto v = lookup(o, "control_drive_freq")) p.control_drive_freq = *v;
    if (auto v = lookup(o, "control_precession")) p.control_precession = *v;
    if (auto v = lookup(o, "tau_control")) p.tau_control = *v;
    if (auto v = lookup(o, "phi_c")) p.phi_c = *v;
  }
  if (lookup(o, "theta") || lookup(o, "phi") || target) p.gate = GateKind::Custom;
  p.validate();
  return p;
}

OriginalParams build_original_params(BlockadeModel blockade, const PhysicsOverrides& o) {
  OriginalParams p = presets::baseline(blockade);
  const auto rabi = lookup(o, "rabi_target");
  const auto ratio = lookup(o, "ratio");
  const auto periods = lookup(o, "periods");
  const auto target = lookup(o, "target_phase");
  if (rabi) {
    p.rabi = *rabi;
    p.interaction = presets::kInteractionRatio * *rabi;
  }
  if (auto v = lookup(o, "interaction")) p.interaction = *v;
  if (auto v = lookup(o, "angle")) p.angle = *v;
  if (periods) p.periods = as_periods(*periods);
  if (target) p.target_phase = *target;
  if (rabi || ratio || periods || target) {
    const auto s = floquet::solve_params(p.target_phase, p.rabi, ratio.value_or(presets::kCnotRatio), p.periods);
    p.drive_freq = s.omega;
    p.tau = s.tau;
    p.precession = s.precession;
  }
  p.validate();
  return p;
}

void SweepSpec::validate() const {
  if (points < 2) throw std::invalid_argument("points must be >= 2");
  if (!(std::isfinite(min) && std::isfinite(max)) || !(min < max)) throw std::invalid_argument("require min < max");
  if (gate == GateKind::Custom) throw std::invalid_argument("sweeps run the cnot or ct gate");
  if (param == SweepParam::Detuning && scheme != SweepScheme::FgqcFgqc)
    throw std::invalid_argument("detuning sweeps apply to the fgqc-fgqc scheme only");
  if (param == SweepParam::Decay && min < 0.0) throw std::invalid_argument("decay rates must be >= 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (scheme == SweepScheme::Original && (param != SweepParam::Rabi || gamma != 0.0))
    throw std::invalid_argument("the original-fgqc baseline supports rabi sweeps without decay only");
  if (!(integrator.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  for (const auto& [k, v] : physics.values) {
    bool known = false;
    for (const auto& key : physics_override_keys()) known = known || key == k;
    if (!known) throw std::invalid_argument("unknown physics override '" + k + "'");
    if (!std::isfinite(v)) throw std::invalid_argument("override '" + k + "' must be finite");
  }
}

std::vector<double> sweep_grid(double min, double max, int points) {
  if (points < 2) throw std::invalid_argument("points must be >= 2");
  std::vector<double> g(points);
  const double step = (max - min) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = min + i * step;
  g.front() = min;
  g.back() = max;
  return g;
}

SweepRow evaluate_point(const SweepSpec& spec, double value) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepRow row;
  row.gate = std::string(to_string(spec.gate));
  row.scheme = std::string(to_string(spec.scheme));
  row.param = std::string(to_string(spec.param));
  row.value = value;

  FidelityResult f;
  if (spec.scheme == SweepScheme::Original) {
    const auto p = build_original_params(spec.blockade, spec.physics);
    const auto ch = original_fgqc_channel(p, value, spec.integrator);
    f = average_gate_fidelity(original_fgqc_ideal(p.angle, p.target_phase).matrix, ch);
  } else {
    const auto p = build_params(spec.gate, to_scheme(spec.scheme), spec.blockade, spec.physics);
    NoiseModel n;
    double gamma = spec.gamma;
    switch (spec.param) {
      case SweepParam::Rabi: n.rabi_error = value; break;
      case SweepParam::Detuning: n.detuning_error = value; break;
      case SweepParam::Decay: gamma = value; break;
    }
    if (gamma > 0.0) n.with_decay(gamma, spec.jumps);
    f = average_gate_fidelity(ideal_for(p).matrix, realized_channel(p, n, spec.integrator));
  }
  row.fidelity = f.value;
  row.leakage = f.leakage;
  if (spec.timing)
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

int resolve_threads(int requested, int points) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FGQC_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<long>(n, cap);
  }
  return std::clamp(n, 1, std::max(1, points));
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  // Fail on bad parameters or step size before spawning workers.
  if (spec.scheme == SweepScheme::Original) {
    check_step_size(original_schedule(build_original_params(spec.blockade, spec.physics), 0.0), spec.integrator);
  } else {
    const auto p = build_params(spec.gate, to_scheme(spec.scheme), spec.blockade, spec.physics);
    check_step_size(schedule(p, NoiseModel::none()), spec.integrator);
  }

  const auto grid = sweep_grid(spec.min, spec.max, spec.points);
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        rows[i] = evaluate_point(spec, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nthreads = resolve_threads(spec.threads, spec.points);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.gate << ',' << r.scheme << ',' << r.param << ',' << format_number(r.value) << ','
       << format_number(r.fidelity) << ',' << format_number(r.leakage) << ',' << format_number(r.runtime_ms) << '\n';
  }
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(f);
}

namespace {

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument("config key '" + key + "': not a number: '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x)) throw std::invalid_argument("config key '" + key + "': expected an integer");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config key '" + key + "': expected true or false");
}

}  // namespace

void apply_config(SweepSpec& spec, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == "gate") spec.gate = parse_gate(v);
    else if (k == "scheme") spec.scheme = parse_sweep_scheme(v);
    else if (k == "param") spec.param = parse_sweep_param(v);
    else if (k == "min") spec.min = to_double(k, v);
    else if (k == "max") spec.max = to_double(k, v);
    else if (k == "points") spec.points = to_int(k, v);
    else if (k == "gamma") spec.gamma = to_double(k, v);
    else if (k == "dt") spec.integrator.dt = to_double(k, v);
    else if (k == "out") spec.out = v;
    else if (k == "blockade") spec.blockade = parse_blockade(v);
    else if (k == "jumps") spec.jumps = parse_decay_channels(v);
    else if (k == "timing") spec.timing = to_bool(k, v);
    else if (k == "threads") spec.threads = to_int(k, v);
    else {
      bool physics = false;
      for (const auto& key : physics_override_keys()) physics = physics || key == k;
      if (!physics) throw std::invalid_argument("unknown config key '" + k + "'");
      spec.physics.values[k] = to_double(k, v);
    }
  }
}

std::string params_report(GateKind gate, Scheme scheme, BlockadeModel blockade, const PhysicsOverrides& o) {
  const GateParams p = build_params(gate, scheme, blockade, o);
  const double pi = std::numbers::pi;
  std::ostringstream os;
  auto line = [&](const std::string& name, const std::string& value, const std::string& unit = "") {
    os << "  " << name;
    for (std::size_t i = name.size(); i < 26; ++i) os << ' ';
    os << value << (unit.empty() ? "" : " " + unit) << '\n';
  };
  auto num = [](double x) { return format_number(x); };
  os << "gate " << to_string(p.gate) << ", scheme " << to_string(scheme) << ", blockade " << to_string(blockade)
     << '\n';
  line("theta", num(p.theta), "rad");
  line("phi", num(p.phi), "rad");
  line("Omega0", num(p.rabi_target), "rad/us");
  line("V", num(p.interaction), "rad/us");
  line("V/Omega0", num(p.interaction / p.rabi_target));
  line("omega", num(p.drive_freq), "rad/us");
  line("N", num(p.precession), "rad/us");
  line("k", std::to_string(p.periods));
  line("tau (T2)", num(p.tau), "us");
  if (scheme == Scheme::DgFgqc) {
    line("Omega1", num(p.rabi_control), "rad/us");
  } else {
    line("Omega'", num(p.rabi_control_floquet), "rad/us");
    line("omega1", num(p.control_drive_freq), "rad/us");
    line("N1", num(p.control_precession), "rad/us");
    line("tau1", num(p.tau_control), "us");
    line("phi_c", num(p.phi_c), "rad");
    const double c1 = -0.5 * p.control_precession *
                      (1.0 - floquet::bessel_j0(p.rabi_control_floquet / p.control_drive_freq));
    line("|C1| tau1 (target pi/2)", num(std::abs(c1) * p.tau_control), "rad");
  }
  line("T1, T2, T3", num(p.step1_duration()) + ", " + num(p.step2_duration()) + ", " + num(p.step3_duration()), "us");
  const double c = floquet::coefficient_C(p.precession, p.rabi_target, p.drive_freq);
  line("C", num(c), "rad/us");
  line("C*tau", num(c * p.tau), "rad");
  os << "residuals\n";
  line("omega*tau - k*pi", num(p.drive_freq * p.tau - p.periods * pi), "rad");
  line("C*tau - target", num(c * p.tau - p.target_phase), "rad");
  const double ad = p.precession == 0.0 ? INFINITY : p.drive_freq / std::abs(p.precession);
  line("omega/|N|", num(ad) + (ad >= 5.0 ? " (adiabatic)" : " (warning: below 5)"));
  return os.str();
}

}  // namespace fgqc
