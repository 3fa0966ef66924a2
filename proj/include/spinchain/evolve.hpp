// Copyright 2026 The spinchain Authors
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

#ifndef SPINCHAIN_EVOLVE_HPP
#define SPINCHAIN_EVOLVE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinchain/density_matrix.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/lindblad.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain {

enum class Engine { ElementWise, OperatorBuilt };

constexpr std::string_view engine_name(Engine e) {
  return e == Engine::ElementWise ? "element_wise" : "operator";
}

inline std::optional<Engine> parse_engine(std::string_view s) {
  if (s == engine_name(Engine::ElementWise)) return Engine::ElementWise;
  if (s == engine_name(Engine::OperatorBuilt)) return Engine::OperatorBuilt;
  return std::nullopt;
}

struct EvolutionConfig {
  double dt = 1e-3;
  double t_max = 50.0;
  std::size_t record_stride = 100;
  Engine engine = Engine::ElementWise;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("dt must be positive");
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ArgumentError("t_max must be >= 0");
    if (record_stride < 1) throw ArgumentError("record_stride must be >= 1");
  }

  /// Number of dt steps covering [0, t_max]; t_max is rounded to the grid.
  std::size_t steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }
};

/// d(rho~)/dt through the selected engine.
inline CMatrix evaluate_rhs(Engine engine, const CMatrix& rho, double t, const SpinChainParams& p,
                            const EnvironmentSpec& env) {
  if (engine == Engine::OperatorBuilt) {
    return lindblad_rhs_operator(rho, tilde_jump_operators(t, p, env));
  }
  if (is_dissipation(env.model())) return rhs_dissipation(rho, t, p, env);
  return rhs_dephasing(rho, env);
}

struct Sample {
  std::size_t step = 0;
  double tau = 0.0;
  CMatrix rho;
};

struct Trajectory {
  std::vector<Sample> samples;
};

/// Called for every recorded sample as it is produced.
using Observer = std::function<void(const Sample&)>;

/// Fixed-step classical RK4 on the interaction-picture density matrix.
///
/// Samples are taken at step 0, every `record_stride` steps, and at the final
/// step. The state is never renormalised. Time is computed as step * dt, not
/// accumulated.
inline Trajectory rk4_evolve(const DensityMatrix& rho0, const EvolutionConfig& cfg,
                             const SpinChainParams& p, const EnvironmentSpec& env,
                             const Observer& observer = {}) {
  cfg.validate();
  p.validate();
  if (env.n_qubits() != p.n_qubits || rho0.n_qubits() != p.n_qubits) {
    throw ArgumentError("state, chain and environment sizes disagree");
  }

  Trajectory traj;
  const std::size_t steps = cfg.steps();
  CMatrix rho = rho0.matrix();

  auto record = [&](std::size_t step) {
    Sample s{step, static_cast<double>(step) * cfg.dt, rho};
    if (observer) observer(s);
    traj.samples.push_back(std::move(s));
  };
  auto f = [&](const CMatrix& y, double t) { return evaluate_rhs(cfg.engine, y, t, p, env); };

  record(0);
  const double h = cfg.dt;
  for (std::size_t step = 0; step < steps; ++step) {
    const double t = static_cast<double>(step) * h;
    const CMatrix k1 = f(rho, t);
    CMatrix y = rho;
    y.add_scaled(k1, 0.5 * h);
    const CMatrix k2 = f(y, t + 0.5 * h);
    y = rho;
    y.add_scaled(k2, 0.5 * h);
    const CMatrix k3 = f(y, t + 0.5 * h);
    y = rho;
    y.add_scaled(k3, h);
    const CMatrix k4 = f(y, t + h);

    CMatrix incr = k1;
    incr.add_scaled(k2, 2.0);
    incr.add_scaled(k3, 2.0);
    incr += k4;
    rho.add_scaled(incr, h / 6.0);

    if (!rho.all_finite()) throw DivergenceError(step + 1, static_cast<double>(step + 1) * h);
    const std::size_t done = step + 1;
    if (done % cfg.record_stride == 0 || done == steps) record(done);
  }
  return traj;
}

/// Schrodinger-picture state from an interaction-picture one:
/// rho_mn = exp(-i (E_m - E_n) tau) rho~_mn.
inline CMatrix to_schrodinger_picture(const CMatrix& rho_tilde, double tau,
                                      const SpinChainParams& p) {
  const auto e = spectrum(p);
  CMatrix out = rho_tilde;
  for (std::size_t m = 0; m < out.dim(); ++m)
    for (std::size_t n = 0; n < out.dim(); ++n) out(m, n) *= std::polar(1.0, -(e[m] - e[n]) * tau);
  return out;
}

}  // namespace spinchain

#endif  // SPINCHAIN_EVOLVE_HPP
