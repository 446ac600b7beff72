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

#include "fgqc/validate.hpp"

#include "fgqc/fidelity.hpp"
#include "fgqc/floquet.hpp"
#include "fgqc/gates.hpp"
#include "fgqc/pulses.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace fgqc {

Injection parse_injection(const std::string& s) {
  if (s.empty() || s == "none") return Injection::None;
  if (s == "large-dt") return Injection::LargeDt;
  if (s == "non-hermitian") return Injection::NonHermitian;
  throw std::invalid_argument("unknown injection '" + s + "' (expected large-dt or non-hermitian)");
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct NamedParams {
  std::string name;
  GateParams params;
};

std::vector<NamedParams> preset_configs() {
  std::vector<NamedParams> out;
  for (auto g : {GateKind::Cnot, GateKind::ControlledT})
    for (auto s : {Scheme::DgFgqc, Scheme::FgqcFgqc})
      for (auto b : {BlockadeModel::Ideal, BlockadeModel::Finite}) {
        out.push_back({std::string(to_string(g)) + "/" + std::string(to_string(s)) + "/" + std::string(to_string(b)),
                       presets::operating_point(g, s, b)});
      }
  return out;
}

PulseSchedule with_injected_fault(PulseSchedule s) {
  auto h = s.segments[1].hamiltonian;
  s.segments[1].hamiltonian = [h](double t) {
    Op9 m = h(t);
    m(basis_index(Level::g, Level::g), basis_index(Level::g, Level::e)) += cplx(0.0, 1e-3);
    return m;
  };
  s.segments[1].label += "+fault";
  return s;
}

CheckResult check_hermiticity(Injection inject) {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  std::string where;
  auto probe = [&](const auto& sched, const std::string& name) {
    for (const auto& seg : sched.segments) {
      std::uniform_real_distribution<double> u(0.0, seg.duration);
      for (int i = 0; i < 1000; ++i) {
        const double e = hermiticity_error(seg.hamiltonian(u(rng)));
        if (e > worst) {
          worst = e;
          where = name + ":" + seg.label;
        }
      }
    }
  };
  for (const auto& c : preset_configs()) {
    auto s = schedule(c.params, NoiseModel::rabi(0.07));
    if (inject == Injection::NonHermitian) s = with_injected_fault(std::move(s));
    probe(s, c.name);
  }
  for (auto b : {BlockadeModel::Ideal, BlockadeModel::Finite}) probe(original_schedule(presets::baseline(b), 0.05), "original");
  CheckResult r{"hermiticity of H(t) (1e-12)", worst < 1e-12, "max ||H - H^dag|| = " + fmt(worst)};
  if (!r.passed) r.detail += " at " + where;
  return r;
}

CheckResult check_unitarity(const IntegratorConfig& cfg, Injection inject) {
  double worst = 0.0;
  std::string where;
  auto record = [&](double e, const std::string& name) {
    if (e > worst) {
      worst = e;
      where = name;
    }
  };
  for (auto g : {GateKind::ControlledT, GateKind::Cnot}) {
    auto s = schedule(presets::operating_point(g, Scheme::DgFgqc, BlockadeModel::Finite), NoiseModel::none());
    if (inject == Injection::NonHermitian) s = with_injected_fault(std::move(s));
    record(unitarity_error(evolve_unitary(s, cfg)), std::string(to_string(g)));
  }
  record(unitarity_error(evolve_unitary(original_schedule(presets::baseline(BlockadeModel::Finite), 0.0), cfg)),
         "original");
  CheckResult r{"unitarity of propagators (1e-8)", worst < 1e-8, "max ||U^dag U - I|| = " + fmt(worst)};
  if (!r.passed) r.detail += " for " + where;
  return r;
}

CheckResult check_lindblad(const IntegratorConfig& cfg) {
  const auto p = presets::operating_point(GateKind::ControlledT, Scheme::DgFgqc);
  NoiseModel strong;
  strong.with_decay(0.5);
  const auto s = schedule(p, strong);
  StateVector psi = (basis_state(Level::g, Level::g) + basis_state(Level::e, Level::e)) / std::sqrt(2.0);
  const auto rho0 = DensityMatrix::pure(psi);
  const auto rho = evolve_lindblad(s, rho0, strong, cfg).matrix();
  const double trace_err = std::abs(rho.trace() - 1.0);
  const double herm = hermiticity_error(rho);

  const auto s0 = schedule(p, NoiseModel::none());
  const Op9 w = evolve_unitary(s0, cfg);
  const Op9 unitary = w * rho0.matrix() * w.adjoint();
  const double reduce = (evolve_lindblad(s0, rho0, NoiseModel::none(), cfg).matrix() - unitary).cwiseAbs().maxCoeff();

  const bool ok = trace_err < 1e-6 && herm < 1e-8 && reduce < 1e-8;
  return {"Lindblad trace (1e-6), Hermiticity (1e-8), Gamma=0 limit (1e-8)", ok,
          "trace error " + fmt(trace_err) + ", hermiticity " + fmt(herm) + ", unitary limit " + fmt(reduce)};
}

CheckResult check_dark_state() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (const auto& c : preset_configs()) {
    const auto& p = c.params;
    const Vec2 dark = bright_dark(p.theta, p.phi).second;
    Eigen::Matrix<cplx, 3, 1> d3 = Eigen::Matrix<cplx, 3, 1>::Zero();
    d3(0) = dark(0);
    d3(1) = dark(1);
    std::uniform_real_distribution<double> u(0.0, p.tau);
    for (Level ctrl : {Level::g, Level::e}) {
      Eigen::Matrix<cplx, 3, 1> c3 = Eigen::Matrix<cplx, 3, 1>::Zero();
      c3(static_cast<int>(ctrl)) = 1.0;
      StateVector v;
      for (int i = 0; i < 3; ++i) v.segment<3>(3 * i) = c3(i) * d3;
      for (int i = 0; i < 200; ++i) {
        const double nrm = (step2_hamiltonian(u(rng), p, NoiseModel::rabi(0.1)) * v).norm();
        worst = std::max(worst, nrm);
      }
    }
  }
  return {"dark-state decoupling in step 2 (1e-12)", worst < 1e-12, "max ||H2 |c,d>|| = " + fmt(worst)};
}

CheckResult check_blockade(const IntegratorConfig& cfg) {
  double peak = 0.0;
  std::string where;
  for (auto g : {GateKind::Cnot, GateKind::ControlledT}) {
    const auto p = presets::operating_point(g, Scheme::DgFgqc, BlockadeModel::Finite);
    const auto s = schedule(p, NoiseModel::none());
    check_step_size(s, cfg);
    Eigen::Matrix<cplx, 9, 4> psi = Eigen::Matrix<cplx, 9, 4>::Zero();
    for (int j = 0; j < 4; ++j) psi(kComputationalIndices[j], j) = 1.0;
    for (const auto& seg : s.segments) {
      const int n = detail::step_count(seg.duration, cfg.dt);
      const double h = seg.duration / n;
      for (int k = 0; k < n; ++k) {
        psi = detail::magnus_step<9>(seg.hamiltonian, k * h, h) * psi;
        const double rr = psi.row(8).cwiseAbs2().maxCoeff();
        if (rr > peak) {
          peak = rr;
          where = std::string(to_string(g)) + ":" + seg.label;
        }
      }
    }
  }
  return {"blockade |rr> population bound, V = 20 Omega0 (1e-2)", peak < 1e-2,
          "peak |rr> population " + fmt(peak) + (where.empty() ? "" : " (" + where + ")")};
}

CheckResult check_x_field() {
  using floquet::Field3;
  auto p = presets::operating_point(GateKind::Cnot, Scheme::FgqcFgqc);
  double worst = 0.0;
  double at_zero = 0.0;
  auto probe = [&](const Field3& n, const Field3& nd) {
    at_zero = std::max(at_zero, floquet::x_field(0.0, n, nd).norm());
    for (double F = -0.5; F <= 0.5; F += 0.05) {
      const double h = 1e-4;
      const Field3 d = (-floquet::x_field(F + 2 * h, n, nd) + 8.0 * floquet::x_field(F + h, n, nd) -
                        8.0 * floquet::x_field(F - h, n, nd) + floquet::x_field(F - 2 * h, n, nd)) /
                       (12.0 * h);
      worst = std::max(worst, (d - floquet::x_field_rhs(floquet::x_field(F, n, nd), n, nd)).norm());
    }
  };
  for (int i = 0; i <= 20; ++i) {
    probe(floquet::target_field(i * p.tau / 20, p), floquet::target_field_rate(i * p.tau / 20, p));
    probe(floquet::control_field(i * p.tau_control / 20, p), floquet::control_field_rate(i * p.tau_control / 20, p));
  }
  const bool ok = worst < 1e-6 && at_zero == 0.0;
  return {"x_field ODE residual (1e-6)", ok, "max residual " + fmt(worst) + ", |X(0)| = " + fmt(at_zero)};
}

CheckResult check_j0() {
  double worst = 0.0;
  for (int i = 0; i <= 1200; ++i) {
    const double a = 0.05 * i;
    worst = std::max(worst, std::abs(floquet::bessel_j0(a) - floquet::bessel_j0_series(a)));
  }
  return {"J0 quadrature vs series cross-check (1e-10)", worst < 1e-10, "max difference on [0, 60] " + fmt(worst)};
}

CheckResult check_twirl() {
  const auto basis = pauli_basis2();
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  Op4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  Op4 sum = Op4::Zero();
  for (const auto& u : basis) sum += u * a * u.adjoint();
  double twirl = (sum - 4.0 * a.trace() * Op4::Identity()).cwiseAbs().maxCoeff();
  double ortho = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < basis.size(); ++k)
      ortho = std::max(ortho, std::abs((basis[j].adjoint() * basis[k]).trace() - (j == k ? 4.0 : 0.0)));
  return {"Pauli twirl and orthogonality (1e-10)", twirl < 1e-10 && ortho < 1e-10,
          "twirl residual " + fmt(twirl) + ", orthogonality residual " + fmt(ortho)};
}

CheckResult check_fidelity_sanity() {
  const Op4 u = cnot().matrix;
  const Eigen::MatrixXcd w = embed_computational(u) + (Op9::Identity() - embed_computational(Op4(Op4::Identity())));
  const double perfect = average_gate_fidelity(u, QuantumChannel::from_unitary(w, {0, 1, 3, 4})).value;
  const double depol = average_gate_fidelity(Eigen::MatrixXcd(u), [](const Eigen::MatrixXcd& a) {
    return Eigen::MatrixXcd(a.trace() / 4.0 * Eigen::MatrixXcd::Identity(4, 4));
  });
  const bool ok = std::abs(perfect - 1.0) < 1e-10 && std::abs(depol - 0.25) < 1e-10;
  return {"fidelity formula sanity values 1.0 and 0.25", ok,
          "perfect " + std::to_string(perfect) + ", depolarizing " + std::to_string(depol)};
}

CheckResult check_boundary() {
  double worst = 0.0;
  for (auto g : {GateKind::Cnot, GateKind::ControlledT}) {
    const auto p = presets::operating_point(g, Scheme::DgFgqc);
    worst = std::max(worst, (floquet::micromotion(p.tau, p) - Op2::Identity()).cwiseAbs().maxCoeff());
    worst = std::max(worst, (floquet::micromotion(0.0, p) - Op2::Identity()).cwiseAbs().maxCoeff());
  }
  return {"micromotion boundary R(tau) = R(0) = I (1e-12)", worst < 1e-12, "max ||R - I|| = " + fmt(worst)};
}

CheckResult check_dt_halving(IntegratorConfig cfg, Injection inject) {
  CheckResult r{"dt-halving stability of gate fidelity (1e-6)", false, ""};
  try {
    std::string detail;
    bool ok = true;
    for (auto g : {GateKind::ControlledT, GateKind::Cnot}) {
      const auto p = presets::operating_point(g, Scheme::DgFgqc);
      const auto s = schedule(p, NoiseModel::none());
      IntegratorConfig c = cfg;
      if (inject == Injection::LargeDt) c.dt = 5.0 * kMaxPhasePerStep / s.max_rate;
      const auto ideal = ideal_for(p).matrix;
      const auto rep = convergence_check<9>(s, c, [&](const IntegratorConfig& k) {
        return average_gate_fidelity(ideal, realized_channel(p, NoiseModel::none(), k)).value;
      });
      ok = ok && rep.passed;
      detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(g)) + " |dF| = " + fmt(rep.difference);
    }
    r.passed = ok;
    r.detail = detail;
  } catch (const StepSizeError& e) {
    r.detail = std::string("step-size invariant violated: ") + e.what();
  }
  return r;
}

CheckResult check_effective_gate() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) worst = std::max(worst, unitarity_error(floquet::effective_gate(u(rng), u(rng), u(rng))));
  return {"effective_gate unitarity (1e-12)", worst < 1e-12, "max ||U^dag U - I|| = " + fmt(worst)};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& opts,
                                        const std::function<void(const CheckResult&)>& progress) {
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_hermiticity(opts.inject); },
      [&] { return check_unitarity(opts.cfg, opts.inject); },
      [&] { return check_lindblad(opts.cfg); },
      [&] { return check_dark_state(); },
      [&] { return check_blockade(opts.cfg); },
      [&] { return check_x_field(); },
      [&] { return check_j0(); },
      [&] { return check_twirl(); },
      [&] { return check_fidelity_sanity(); },
      [&] { return check_boundary(); },
      [&] { return check_effective_gate(); },
      [&] { return check_dt_halving(opts.cfg, opts.inject); },
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckResult r;
    try {
      r = checks[i]();
    } catch (const std::exception& e) {
      r = {"check #" + std::to_string(i + 1), false, std::string("exception: ") + e.what()};
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fgqc
