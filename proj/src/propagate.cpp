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

#include "fgqc/propagate.hpp"

#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

namespace fgqc {

namespace {

using Super = Eigen::SparseMatrix<cplx>;
using Vec81 = Eigen::Matrix<cplx, 81, 1>;

Super half_step_dissipation(const Eigen::MatrixXcd& generator, double h) {
  const Eigen::MatrixXcd e = (generator * cplx(0.5 * h, 0.0)).exp();
  // Entries below 1e-18 of the largest are round-off from the Pade solve.
  Super out = e.sparseView(e.cwiseAbs().maxCoeff(), 1e-18);
  out.makeCompressed();
  return out;
}

void dissipate(const Super& e, Op9& rho) {
  Eigen::Map<Vec81> v(rho.data());
  const Vec81 tmp = e * v;
  v = tmp;
}

std::vector<Op9> conjugate_all(const Op9& w, const std::vector<Op9>& inputs) {
  std::vector<Op9> out;
  out.reserve(inputs.size());
  for (const auto& a : inputs) out.push_back(w * a * w.adjoint());
  return out;
}

}  // namespace

Eigen::MatrixXcd dissipator_superoperator(const std::vector<Op9>& jumps) {
  const Op9 id = Op9::Identity();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(81, 81);
  for (const auto& l : jumps) {
    const Op9 ldl = l.adjoint() * l;
    d += Eigen::kroneckerProduct(Op9(l.conjugate()), l);
    d -= 0.5 * Eigen::kroneckerProduct(id, ldl);
    d -= 0.5 * Eigen::kroneckerProduct(Op9(ldl.transpose()), id);
  }
  return d;
}

std::vector<Op9> apply_channel_batch(const PulseSchedule& s, const NoiseModel& noise, const std::vector<Op9>& inputs,
                                     const IntegratorConfig& cfg) {
  noise.validate();
  s.validate();
  check_step_size(s, cfg);
  if (noise.jumps.empty()) return conjugate_all(evolve_unitary(s, cfg), inputs);

  const Eigen::MatrixXcd generator = dissipator_superoperator(noise.jumps);
  std::vector<Op9> rho = inputs;
  for (const auto& seg : s.segments) {
    const int n = detail::step_count(seg.duration, cfg.dt);
    const double h = seg.duration / n;
    const Super e = half_step_dissipation(generator, h);
    for (int k = 0; k < n; ++k) {
      const Op9 u = detail::magnus_step<9>(seg.hamiltonian, k * h, h);
      for (auto& r : rho) {
        dissipate(e, r);
        r = u * r * u.adjoint();
        dissipate(e, r);
      }
    }
  }
  return rho;
}

Op9 apply_channel(const PulseSchedule& s, const NoiseModel& noise, const Op9& input, const IntegratorConfig& cfg) {
  return apply_channel_batch(s, noise, {input}, cfg).front();
}

DensityMatrix evolve_lindblad(const PulseSchedule& s, const DensityMatrix& rho0, const NoiseModel& noise,
                              const IntegratorConfig& cfg) {
  return DensityMatrix::unchecked(apply_channel(s, noise, rho0.matrix(), cfg));
}

const Eigen::MatrixXcd& QuantumChannel::UnitaryCache::get() {
  std::call_once(once, [this] { w = make(); });
  return w;
}

QuantumChannel QuantumChannel::from_schedule(PulseSchedule s, NoiseModel noise, IntegratorConfig cfg,
                                             std::string label) {
  s.validate();
  noise.validate();
  check_step_size(s, cfg);
  const std::vector<int> comp(kComputationalIndices.begin(), kComputationalIndices.end());
  if (noise.jumps.empty()) {
    return from_unitary([s, cfg] { return Eigen::MatrixXcd(evolve_unitary(s, cfg)); }, 9, comp, std::move(label));
  }
  BatchMap map = [s, noise, cfg](const std::vector<Eigen::MatrixXcd>& in) {
    std::vector<Op9> ops;
    ops.reserve(in.size());
    for (const auto& a : in) {
      if (a.rows() != 9 || a.cols() != 9) throw DimensionError("channel input must be 9x9");
      ops.emplace_back(a);
    }
    const auto res = apply_channel_batch(s, noise, ops, cfg);
    return std::vector<Eigen::MatrixXcd>(res.begin(), res.end());
  };
  return from_map(9, comp, std::move(map), std::move(label));
}

QuantumChannel QuantumChannel::from_unitary(Eigen::MatrixXcd w, std::vector<int> computational, std::string label) {
  const int dim = static_cast<int>(w.rows());
  if (w.cols() != dim) throw DimensionError("unitary must be square");
  return from_unitary([w = std::move(w)] { return w; }, dim, std::move(computational), std::move(label));
}

QuantumChannel QuantumChannel::from_unitary(std::function<Eigen::MatrixXcd()> make_w, int dim,
                                            std::vector<int> computational, std::string label) {
  QuantumChannel ch;
  ch.dim_ = dim;
  ch.computational_ = std::move(computational);
  ch.label_ = std::move(label);
  ch.cache_ = std::make_shared<UnitaryCache>();
  ch.cache_->make = std::move(make_w);
  auto cache = ch.cache_;
  ch.map_ = [cache, dim](const std::vector<Eigen::MatrixXcd>& in) {
    const Eigen::MatrixXcd& w = cache->get();
    if (w.rows() != dim || w.cols() != dim) throw DimensionError("propagator has the wrong dimension");
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(in.size());
    for (const auto& a : in) {
      if (a.rows() != dim || a.cols() != dim) throw DimensionError("channel input has the wrong dimension");
      out.push_back(w * a * w.adjoint());
    }
    return out;
  };
  return ch;
}

QuantumChannel QuantumChannel::from_map(int dim, std::vector<int> computational, BatchMap map, std::string label) {
  QuantumChannel ch;
  ch.dim_ = dim;
  ch.computational_ = std::move(computational);
  ch.label_ = std::move(label);
  ch.map_ = std::move(map);
  return ch;
}

std::vector<Eigen::MatrixXcd> QuantumChannel::apply(const std::vector<Eigen::MatrixXcd>& inputs) const {
  if (!map_) throw std::logic_error("empty quantum channel");
  return map_(inputs);
}

Eigen::MatrixXcd QuantumChannel::apply(const Eigen::MatrixXcd& input) const { return apply(std::vector{input}).front(); }

std::optional<Eigen::MatrixXcd> QuantumChannel::unitary() const {
  if (!cache_) return std::nullopt;
  return cache_->get();
}

}  // namespace fgqc
