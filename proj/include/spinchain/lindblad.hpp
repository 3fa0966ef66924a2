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

// Interaction-picture Lindblad generators for the spin chain.
//
// Two independent routes compute the same derivative d(rho~)/dt:
//
//  * element-wise: closed expressions for each entry rho_mn, written in terms
//    of bit tests and index shifts m +- 2^(N-k);
//  * operator-built: explicit jump-operator matrices S~_k^- (t) = U S_k^- U^dagger
//    or S_k^z, combined in the standard Lindblad form.
//
// With gamma_jk (dissipation) and Gamma_jk (dephasing) symmetric rate
// matrices the generators are
//
//   dissipation: sum_jk gamma_jk/2 (2 S~k- rho S~j+ - S~j+ S~k- rho - rho S~j+ S~k-)
//   dephasing:   sum_jk Gamma_jk   (2 Szk rho Szj - Szj Szk rho - rho Szj Szk)
//
// with S^z = diag((-1)^xi / 2) and S^- lowering a bit from 1 to 0. The
// uncorrelated models are the diagonal specialisations.

#ifndef SPINCHAIN_LINDBLAD_HPP
#define SPINCHAIN_LINDBLAD_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "spinchain/density_matrix.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain {

namespace detail {

inline void require_dissipation(const EnvironmentSpec& env, const char* op) {
  if (!is_dissipation(env.model())) {
    throw UsageError(std::string(op) + " needs a dissipation model, got " +
                     std::string(model_name(env.model())));
  }
}

inline void require_dephasing(const EnvironmentSpec& env, const char* op) {
  if (!is_dephasing(env.model())) {
    throw UsageError(std::string(op) + " needs a dephasing model, got " +
                     std::string(model_name(env.model())));
  }
}

inline void require_shape(const CMatrix& rho, int n_qubits) {
  if (rho.dim() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("density matrix dimension " + std::to_string(rho.dim()) +
                        " does not match a " + std::to_string(n_qubits) + "-qubit register");
  }
}

// phase[k-1][x] = exp(-i F_k(x) t) for every offset x whose bit k is 1, where
// F_k(x) = E(x) - E(x with bit k cleared). This is the entry
// (x - 2^(N-k), x) of S~_k^-(t) = U S_k^- U^dagger with U = exp(i H t).
inline std::vector<std::vector<Complex>> lowering_phases(double t, const SpinChainParams& p) {
  const auto energies = spectrum(p);
  const int n = p.n_qubits;
  std::vector<std::vector<Complex>> phase(static_cast<std::size_t>(n),
                                          std::vector<Complex>(energies.size()));
  for (int k = 1; k <= n; ++k) {
    const auto mask = qubit_mask(k, n);
    for (std::size_t x = 0; x < energies.size(); ++x) {
      if ((x & mask) == 0) continue;
      const double freq = energies[x] - energies[x & ~mask];
      phase[static_cast<std::size_t>(k - 1)][x] = std::polar(1.0, -freq * t);
    }
  }
  return phase;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element-wise engine

/// d(rho~_mn)/dt for the dissipation models, entry by entry.
///
/// For each ordered qubit pair (j, k) with rate g = gamma_jk:
///   + g    [xi_k(m)=0, xi_j(n)=0]      phase * rho_{m+s_k, n+s_j}
///   - g/2  [xi_j(m)=1, xi_k(m-s_j)=0]  phase * rho_{m-s_j+s_k, n}
///   - g/2  [xi_k(n)=1, xi_j(n-s_k)=0]  phase * rho_{m, n-s_k+s_j}
/// with s_q = 2^(N-q) and phases taken from the lowering operators. For j = k the
/// last two terms are the decay -(gamma_k/2)(xi_k(m) + xi_k(n)) rho_mn and the
/// first is the feed from the pair with bit k raised in both indices.
inline CMatrix rhs_dissipation(const CMatrix& rho, double t, const SpinChainParams& p,
                               const EnvironmentSpec& env) {
  detail::require_dissipation(env, "rhs_dissipation");
  detail::require_shape(rho, p.n_qubits);
  if (env.n_qubits() != p.n_qubits) throw ArgumentError("environment size does not match chain");

  const int n = p.n_qubits;
  const std::size_t dim = rho.dim();
  const auto phase = detail::lowering_phases(t, p);
  const RateMatrix& g = env.gamma();

  CMatrix out(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t nn = 0; nn < dim; ++nn) {
      Complex acc{};
      for (int j = 1; j <= n; ++j) {
        const auto sj = detail::qubit_mask(j, n);
        const auto& ph_j = phase[static_cast<std::size_t>(j - 1)];
        for (int k = 1; k <= n; ++k) {
          const double rate = g(j, k);
          if (rate == 0.0) continue;
          const auto sk = detail::qubit_mask(k, n);
          const auto& ph_k = phase[static_cast<std::size_t>(k - 1)];

          // S~k- rho S~j+ : raise bit k of m and bit j of n.
          if ((m & sk) == 0 && (nn & sj) == 0) {
            const std::size_t a = m | sk;
            const std::size_t b = nn | sj;
            acc += rate * ph_k[a] * std::conj(ph_j[b]) * rho(a, b);
          }
          // S~j+ S~k- rho : bit j of m set, bit k of m - s_j clear. For j == k
          // the second test is implied by the first.
          if ((m & sj) != 0 && ((m & ~sj) & sk) == 0) {
            const std::size_t b = (m & ~sj) | sk;
            acc -= 0.5 * rate * std::conj(ph_j[m]) * ph_k[b] * rho(b, nn);
          }
          // rho S~j+ S~k- : bit k of n must be set.
          if ((nn & sk) != 0 && ((nn & ~sk) & sj) == 0) {
            const std::size_t b = (nn & ~sk) | sj;
            acc -= 0.5 * rate * std::conj(ph_j[b]) * ph_k[nn] * rho(m, b);
          }
        }
      }
      out(m, nn) = acc;
    }
  }
  return out;
}

/// Decay rate R_mn of coherence rho_mn under the dephasing models:
///   R_mn = sum_kl Gamma_kl/4 [(-1)^(a_l^m + a_k^m) + (-1)^(a_l^n + a_k^n)
///                             - 2 (-1)^(a_l^m + a_k^n)]
/// where a_q^m is bit q of state m. R_mm = 0.
inline double dephasing_rate(StateIndex m, StateIndex n, const EnvironmentSpec& env) {
  detail::require_dephasing(env, "dephasing_rate");
  const int nq = env.n_qubits();
  detail::check_state(m, nq);
  detail::check_state(n, nq);
  const RateMatrix& gd = env.gamma_dephase();
  const auto om = m.offset();
  const auto on = n.offset();
  double r = 0.0;
  for (int k = 1; k <= nq; ++k) {
    for (int l = 1; l <= nq; ++l) {
      const double rate = gd(k, l);
      if (rate == 0.0) continue;
      const int mk = detail::bit_at(om, k, nq), ml = detail::bit_at(om, l, nq);
      const int nk = detail::bit_at(on, k, nq), nl = detail::bit_at(on, l, nq);
      r += 0.25 * rate *
           (detail::parity_sign(ml + mk) + detail::parity_sign(nl + nk) -
            2.0 * detail::parity_sign(ml + nk));
    }
  }
  return r;
}

/// Full table R_mn (0-based offsets).
inline std::vector<double> dephasing_rate_table(const EnvironmentSpec& env) {
  detail::require_dephasing(env, "dephasing_rate_table");
  const std::size_t dim = std::size_t{1} << env.n_qubits();
  std::vector<double> r(dim * dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 0; n < dim; ++n)
      r[m * dim + n] = dephasing_rate(StateIndex{static_cast<int>(m) + 1},
                                      StateIndex{static_cast<int>(n) + 1}, env);
  return r;
}

/// d(rho_mn)/dt = -R_mn rho_mn. Time independent; populations are untouched.
inline CMatrix rhs_dephasing(const CMatrix& rho, const EnvironmentSpec& env) {
  detail::require_dephasing(env, "rhs_dephasing");
  detail::require_shape(rho, env.n_qubits());
  const auto rates = dephasing_rate_table(env);
  const std::size_t dim = rho.dim();
  CMatrix out(dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 0; n < dim; ++n) out(m, n) = -rates[m * dim + n] * rho(m, n);
  return out;
}

/// rho_mn(t) = rho_mn(0) exp(-R_mn t).
inline CMatrix closed_form_dephasing(const CMatrix& rho0, double t, const EnvironmentSpec& env) {
  detail::require_dephasing(env, "closed_form_dephasing");
  detail::require_shape(rho0, env.n_qubits());
  const auto rates = dephasing_rate_table(env);
  const std::size_t dim = rho0.dim();
  CMatrix out = rho0;
  if (t == 0.0) return out;
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 0; n < dim; ++n)
      if (m != n) out(m, n) = rho0(m, n) * std::exp(-rates[m * dim + n] * t);
  return out;
}

inline CMatrix closed_form_dephasing(const DensityMatrix& rho0, double t,
                                     const EnvironmentSpec& env) {
  return closed_form_dephasing(rho0.matrix(), t, env);
}

// ---------------------------------------------------------------------------
// Operator-built engine

/// Jump operators L_k and weights W_jk of the generator
///   sum_jk W_jk (L_k rho L_j^dagger - 1/2 L_j^dagger L_k rho - 1/2 rho L_j^dagger L_k).
struct JumpOperatorSet {
  std::vector<CMatrix> ops;  // L_1 .. L_N
  RateMatrix weights;        // W_jk, 1-based
};

/// S_k^- on an n-qubit register: maps |..1_k..> to |..0_k..>.
inline CMatrix lowering_operator(int k, int n_qubits) {
  detail::check_qubit(k, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const auto mask = detail::qubit_mask(k, n_qubits);
  CMatrix s(dim);
  for (std::size_t x = 0; x < dim; ++x)
    if (x & mask) s(x & ~mask, x) = 1.0;
  return s;
}

/// S_k^z = diag((-1)^xi_k / 2).
inline CMatrix spin_z_operator(int k, int n_qubits) {
  detail::check_qubit(k, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMatrix s(dim);
  for (std::size_t x = 0; x < dim; ++x) s(x, x) = 0.5 * detail::parity_sign(detail::bit_at(x, k, n_qubits));
  return s;
}

/// Jump operators in the interaction picture at time t.
///
/// Dissipation: L_k = S~_k^-(t), entry (m, n) = exp(i (E_m - E_n) t) (S_k^-)_mn,
/// weights gamma_jk. Dephasing: L_k = S_k^z (commutes with U), weights 2 Gamma_jk.
inline JumpOperatorSet tilde_jump_operators(double t, const SpinChainParams& p,
                                            const EnvironmentSpec& env) {
  p.validate();
  if (env.n_qubits() != p.n_qubits) throw ArgumentError("environment size does not match chain");
  const int n = p.n_qubits;
  JumpOperatorSet set;
  set.ops.reserve(static_cast<std::size_t>(n));
  set.weights = RateMatrix(n);

  if (is_dissipation(env.model())) {
    const auto energies = spectrum(p);
    for (int k = 1; k <= n; ++k) {
      CMatrix s = lowering_operator(k, n);
      for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c)
          if (s(r, c) != Complex{}) s(r, c) *= std::polar(1.0, (energies[r] - energies[c]) * t);
      set.ops.push_back(std::move(s));
    }
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) set.weights.set(j, k, env.gamma()(j, k));
  } else {
    for (int k = 1; k <= n; ++k) set.ops.push_back(spin_z_operator(k, n));
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) set.weights.set(j, k, 2.0 * env.gamma_dephase()(j, k));
  }
  return set;
}

/// Applies the Lindblad generator of `ops` to rho.
///
/// Evaluated as sum_k (L_k rho) C_k^dagger - 1/2 (M rho + rho M) with
/// C_k = sum_j W_jk L_j and M = sum_jk W_jk L_j^dagger L_k.
inline CMatrix lindblad_rhs_operator(const CMatrix& rho, const JumpOperatorSet& ops) {
  const int n = static_cast<int>(ops.ops.size());
  if (ops.weights.size() != n) throw ArgumentError("jump operator weights do not match operators");
  const std::size_t dim = rho.dim();
  for (const auto& l : ops.ops) {
    if (l.dim() != dim) {
      throw ArgumentError("jump operator dimension " + std::to_string(l.dim()) +
                          " does not match density matrix dimension " + std::to_string(dim));
    }
  }

  std::vector<CMatrix> adj;
  adj.reserve(ops.ops.size());
  for (const auto& l : ops.ops) adj.push_back(l.adjoint());

  CMatrix out(dim);
  CMatrix m_op(dim);
  for (int k = 1; k <= n; ++k) {
    const auto& lk = ops.ops[static_cast<std::size_t>(k - 1)];
    CMatrix c_adj(dim);
    bool any = false;
    for (int j = 1; j <= n; ++j) {
      const double w = ops.weights(j, k);
      if (w == 0.0) continue;
      any = true;
      const auto& lj_adj = adj[static_cast<std::size_t>(j - 1)];
      c_adj.add_scaled(lj_adj, w);
      m_op.add_scaled(lj_adj * lk, w);
    }
    if (any) out += (lk * rho) * c_adj;
  }
  out.add_scaled(m_op * rho, -0.5);
  out.add_scaled(rho * m_op, -0.5);
  return out;
}

}  // namespace spinchain

#endif  // SPINCHAIN_LINDBLAD_HPP
