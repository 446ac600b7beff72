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

#include "fgqc/pulses.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fgqc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int gg = basis_index(Level::g, Level::g);
constexpr int gr = basis_index(Level::g, Level::r);
constexpr int eg = basis_index(Level::e, Level::g);
constexpr int er = basis_index(Level::e, Level::r);
constexpr int rg = basis_index(Level::r, Level::g);
constexpr int rr = basis_index(Level::r, Level::r);

double t_zero_envelope(const GateParams& p) { return kPi / (2.0 * p.drive_freq); }
}  // namespace

TEST_CASE("bright and dark states") {
  auto [b0, d0] = bright_dark(0.0, 0.0);
  CHECK((b0 - Vec2(0, 1)).norm() < 1e-15);
  CHECK((d0 - Vec2(1, 0)).norm() < 1e-15);
  auto [bp, dp] = bright_dark(kPi, 0.0);
  CHECK((bp - Vec2(1, 0)).norm() < 1e-15);
  CHECK((dp - Vec2(0, -1)).norm() < 1e-15);
  auto [bc, dc] = bright_dark(-kPi / 2, 0.0);
  CHECK((bc - Vec2(-1, 1) / std::sqrt(2.0)).norm() < 1e-15);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-7, 7);
  for (int i = 0; i < 50; ++i) {
    auto [b, d] = bright_dark(u(rng), u(rng));
    CHECK(std::abs(b.dot(d)) < 1e-15);
    CHECK(b.norm() == doctest::Approx(1.0));
    CHECK(d.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("step 2 drive") {
  auto p = presets::operating_point(GateKind::Cnot, Scheme::DgFgqc, BlockadeModel::Finite);
  const auto n0 = NoiseModel::none();

  Op9 h = step2_hamiltonian(t_zero_envelope(p), p, n0);
  Op9 v_only = Op9::Zero();
  v_only(rr, rr) = p.interaction;
  CHECK((h - v_only).cwiseAbs().maxCoeff() < 1e-12);

  const double t = 0.731;
  const Op9 base = step2_hamiltonian(t, p, n0);
  const Op9 scaled = step2_hamiltonian(t, p, NoiseModel::rabi(0.1));
  CHECK(scaled(rr, rr) == base(rr, rr));
  Op9 drive = base, drive_scaled = scaled;
  drive(rr, rr) = drive_scaled(rr, rr) = 0.0;
  CHECK((drive_scaled - 1.1 * drive).cwiseAbs().maxCoeff() < 1e-13);

  auto ct = presets::operating_point(GateKind::ControlledT, Scheme::DgFgqc, BlockadeModel::Finite);
  const Op9 hc = step2_hamiltonian(0.3, ct, n0);
  CHECK(std::abs(hc(gg, gr)) == 0.0);
  CHECK(std::abs(hc(basis_index(Level::g, Level::e), gr)) > 0.0);

  // Ideal blockade: no drive while the control sits in |r>, and no V term.
  auto ideal = p;
  ideal.blockade = BlockadeModel::Ideal;
  const Op9 hi = step2_hamiltonian(t, ideal, n0);
  CHECK(hi.block<3, 3>(6, 6).norm() == 0.0);
  CHECK((hi.block<3, 3>(0, 0) - base.block<3, 3>(0, 0)).norm() < 1e-15);
  CHECK((hi.block<3, 3>(3, 3) - base.block<3, 3>(3, 3)).norm() < 1e-15);
  CHECK(step2_hamiltonian(t_zero_envelope(p), ideal, n0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("step 1 pulses") {
  auto dg = presets::operating_point(GateKind::Cnot, Scheme::DgFgqc);
  const Op9 h = step1_hamiltonian(0.1, dg, NoiseModel::none(), +1);
  Op9 expect = Op9::Zero();
  for (int b = 0; b < 3; ++b) {
    expect(b, 6 + b) = expect(6 + b, b) = dg.rabi_control / 2;
  }
  CHECK((h - expect).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((step1_hamiltonian(0.2, dg, NoiseModel::none(), -1) + expect).cwiseAbs().maxCoeff() < 1e-14);
  const Op9 weak = step1_hamiltonian(0.1, dg, NoiseModel::rabi(-0.05), +1);
  CHECK(weak(gg, rg).real() == doctest::Approx(0.95 * dg.rabi_control / 2));
  CHECK(schedule(dg, NoiseModel::rabi(-0.05)).segments[0].duration == doctest::Approx(0.25));

  auto fg = presets::operating_point(GateKind::Cnot, Scheme::FgqcFgqc);
  const Op9 h0 = step1_hamiltonian(0.0, fg, NoiseModel::none(), +1);
  // phi_c = pi/2: transverse term along sigma_y with amplitude Omega', no detuning at t = 0.
  CHECK(std::abs(h0(gg, rg) - cplx(0.0, -fg.rabi_control_floquet / 2)) < 1e-12);
  CHECK(std::abs(h0(gg, gg)) < 1e-15);
  CHECK(std::abs(h0(rg, rg)) < 1e-15);

  // Detuning error scales only the sigma_z part.
  const double t = 3.3;
  const Op9 a = step1_hamiltonian(t, fg, NoiseModel::none(), +1);
  const Op9 b = step1_hamiltonian(t, fg, NoiseModel::detuning(0.1), +1);
  CHECK(std::abs(b(gg, gg) - 1.1 * a(gg, gg)) < 1e-12);
  CHECK(std::abs(b(gg, rg) - a(gg, rg)) < 1e-15);
  // Step 3 flips only the transverse sign.
  const Op9 c = step1_hamiltonian(t, fg, NoiseModel::none(), -1);
  CHECK(std::abs(c(gg, gg) - a(gg, gg)) < 1e-15);
  CHECK(std::abs(c(gg, rg) + a(gg, rg)) < 1e-15);
}

TEST_CASE("schedule durations") {
  auto durations = [](const PulseSchedule& s) {
    return std::vector<double>{s.segments[0].duration, s.segments[1].duration, s.segments[2].duration};
  };
  const auto cd = durations(schedule(presets::operating_point(GateKind::Cnot, Scheme::DgFgqc), NoiseModel::none()));
  CHECK(cd[0] == doctest::Approx(0.25));
  CHECK(cd[1] == doctest::Approx(7.715).epsilon(1e-4));
  CHECK(cd[2] == doctest::Approx(0.25));
  const auto cf = durations(schedule(presets::operating_point(GateKind::Cnot, Scheme::FgqcFgqc), NoiseModel::none()));
  CHECK(cf[0] == doctest::Approx(7.797));
  CHECK(cf[1] == doctest::Approx(7.715).epsilon(1e-4));
  CHECK(cf[2] == doctest::Approx(7.797));
  const auto td = durations(schedule(presets::operating_point(GateKind::ControlledT, Scheme::DgFgqc), NoiseModel::none()));
  CHECK(td[0] == doctest::Approx(0.25));
  CHECK(td[1] == doctest::Approx(1.157).epsilon(0.01));
  CHECK(td[2] == doctest::Approx(0.25));

  const auto s = schedule(presets::operating_point(GateKind::Cnot, Scheme::DgFgqc, BlockadeModel::Finite), NoiseModel::none());
  CHECK(s.total_time() == doctest::Approx(0.5 + s.segments[1].duration));
  CHECK(s.max_rate == doctest::Approx(80 * kPi));

  auto bad = presets::operating_point(GateKind::Cnot, Scheme::DgFgqc);
  bad.tau *= 2;
  CHECK_THROWS_AS(schedule(bad, NoiseModel::none()), InvalidParams);
}

TEST_CASE("every Hamiltonian is Hermitian") {
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (auto g : {GateKind::Cnot, GateKind::ControlledT})
    for (auto sc : {Scheme::DgFgqc, Scheme::FgqcFgqc})
      for (auto b : {BlockadeModel::Ideal, BlockadeModel::Finite}) {
        NoiseModel n;
        n.rabi_error = 0.08;
        n.detuning_error = -0.06;
        const auto s = schedule(presets::operating_point(g, sc, b), n);
        for (const auto& seg : s.segments) {
          std::uniform_real_distribution<double> u(0.0, seg.duration);
          for (int i = 0; i < 1000; ++i) worst = std::max(worst, hermiticity_error(seg.hamiltonian(u(rng))));
        }
      }
  CHECK(worst < 1e-12);
}

TEST_CASE("dark state is decoupled in step 2") {
  for (auto g : {GateKind::Cnot, GateKind::ControlledT})
    for (auto b : {BlockadeModel::Ideal, BlockadeModel::Finite}) {
      const auto p = presets::operating_point(g, Scheme::DgFgqc, b);
      const Vec2 d = bright_dark(p.theta, p.phi).second;
      for (int ctrl : {0, 1}) {
        StateVector v = StateVector::Zero();
        v(3 * ctrl + 0) = d(0);
        v(3 * ctrl + 1) = d(1);
        for (int i = 0; i < 100; ++i) {
          const double t = p.tau * i / 99.0;
          CHECK((step2_hamiltonian(t, p, NoiseModel::rabi(0.1)) * v).norm() < 1e-12);
        }
      }
    }
}

TEST_CASE("drive envelope boundary values") {
  for (auto g : {GateKind::Cnot, GateKind::ControlledT}) {
    const auto p = presets::operating_point(g, Scheme::DgFgqc);
    CHECK(std::abs(std::cos(p.drive_freq * p.tau)) == doctest::Approx(1.0));
    CHECK(std::abs(std::sin(p.drive_freq * p.tau)) < 1e-12);
  }
}

TEST_CASE("baseline Hamiltonian") {
  const auto p = presets::baseline(BlockadeModel::Finite);
  const double t = 0.41;
  const Op4 h = original_fgqc_hamiltonian(t, p.rabi, p.drive_freq, p.precession, kPi / 2, p.interaction, 0.0);
  CHECK(hermiticity_error(h) < 1e-14);
  // |01> couples to |11> through atom 1, |10> through atom 2; symmetric at angle pi/2.
  CHECK(std::abs(h(3, 1)) == doctest::Approx(std::abs(h(3, 2))));
  CHECK(std::abs(h(2, 0)) == doctest::Approx(std::abs(h(1, 0))));

  const double tz = kPi / (2 * p.drive_freq);
  Op4 v_only = Op4::Zero();
  v_only(3, 3) = p.interaction;
  CHECK((original_fgqc_hamiltonian(tz, p.rabi, p.drive_freq, p.precession, 0.9, p.interaction, 0.0) - v_only)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  const double angle = 1.2;
  Vec4 b = Vec4::Zero(), d = Vec4::Zero(), s00 = Vec4::Zero();
  b(1) = std::sin(angle / 2);
  b(2) = -std::cos(angle / 2);
  d(1) = std::cos(angle / 2);
  d(2) = std::sin(angle / 2);
  s00(0) = 1.0;
  const Op4 ha = original_fgqc_hamiltonian(t, p.rabi, p.drive_freq, p.precession, angle, p.interaction, 0.1);
  const Vec4 out = ha * s00;
  CHECK(std::abs(d.dot(out)) < 1e-14);
  CHECK(std::abs(b.dot(out)) == doctest::Approx(out.norm()));

  const Op4 hi = original_fgqc_hamiltonian(t, presets::baseline(BlockadeModel::Ideal), 0.0);
  CHECK(hi.row(3).norm() == 0.0);
  CHECK(hi.col(3).norm() == 0.0);
  CHECK((hi.topLeftCorner<3, 3>() - h.topLeftCorner<3, 3>()).norm() < 1e-15);
}
