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

// Register conventions and spectrum of the Ising nuclear-spin chain.
//
// States carry 1-based labels |1>..|2^N>. Qubit 1 is the most significant
// bit: label m encodes (xi_1 xi_2 ... xi_N) = binary(m - 1). With S^z
// eigenvalue (-1)^xi / 2 and hbar = 1 the chain Hamiltonian is diagonal,
//
//   E = -1/2 sum_k (-1)^xi_k w_k - J/2 sum_k (-1)^(xi_k + xi_k+1)
//                                - J'/2 sum_k (-1)^(xi_k + xi_k+2).
//
// All frequencies are in units of 2*pi*MHz.

#ifndef SPINCHAIN_SPIN_REGISTER_HPP
#define SPINCHAIN_SPIN_REGISTER_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

inline constexpr int kMaxQubits = 10;

/// 1-based basis-state label.
struct StateIndex {
  int value = 1;

  constexpr StateIndex() = default;
  constexpr explicit StateIndex(int v) : value(v) {}

  /// 0-based position in a 2^N vector.
  constexpr std::size_t offset() const { return static_cast<std::size_t>(value - 1); }

  friend constexpr bool operator==(StateIndex, StateIndex) = default;
  friend constexpr auto operator<=>(StateIndex, StateIndex) = default;
};

struct SpinChainParams {
  int n_qubits = 3;
  std::vector<double> omegas{400.0, 200.0, 100.0};
  double coupling_j = 10.0;
  double coupling_jp = 0.4;

  std::size_t dim() const { return std::size_t{1} << n_qubits; }

  void validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw ArgumentError("n_qubits must lie in 1.." + std::to_string(kMaxQubits) +
                          ", got " + std::to_string(n_qubits));
    }
    if (omegas.size() != static_cast<std::size_t>(n_qubits)) {
      throw ArgumentError("expected " + std::to_string(n_qubits) +
                          " Larmor frequencies, got " + std::to_string(omegas.size()));
    }
    for (double w : omegas) {
      if (!std::isfinite(w)) throw ArgumentError("Larmor frequency is not finite");
    }
    if (!std::isfinite(coupling_j) || !std::isfinite(coupling_jp)) {
      throw ArgumentError("coupling constant is not finite");
    }
  }
};

namespace detail {

// Hot-path bit access on a 0-based offset; no range checks.
constexpr int bit_at(std::size_t offset, int k, int n_qubits) {
  return static_cast<int>((offset >> (n_qubits - k)) & 1u);
}

constexpr std::size_t qubit_mask(int k, int n_qubits) {
  return std::size_t{1} << (n_qubits - k);
}

constexpr double parity_sign(int bits) { return (bits & 1) ? -1.0 : 1.0; }

inline void check_qubit(int k, int n_qubits) {
  if (k < 1 || k > n_qubits) {
    throw ArgumentError("qubit index " + std::to_string(k) + " outside 1.." +
                        std::to_string(n_qubits));
  }
}

inline void check_state(StateIndex m, int n_qubits) {
  const int dim = 1 << n_qubits;
  if (m.value < 1 || m.value > dim) {
    throw ArgumentError("state index " + std::to_string(m.value) + " outside 1.." +
                        std::to_string(dim));
  }
}

// Energy of the basis state at a 0-based offset.
inline double energy_at(std::size_t offset, const SpinChainParams& p) {
  const int n = p.n_qubits;
  double zeeman = 0.0;
  double nearest = 0.0;
  double next_nearest = 0.0;
  for (int k = 1; k <= n; ++k) {
    const int xk = bit_at(offset, k, n);
    zeeman += parity_sign(xk) * p.omegas[static_cast<std::size_t>(k - 1)];
    if (k + 1 <= n) nearest += parity_sign(xk + bit_at(offset, k + 1, n));
    if (k + 2 <= n) next_nearest += parity_sign(xk + bit_at(offset, k + 2, n));
  }
  return -0.5 * zeeman - 0.5 * p.coupling_j * nearest - 0.5 * p.coupling_jp * next_nearest;
}

}  // namespace detail

/// Bit xi_k of state m (qubit 1 is the most significant bit).
inline int bit_of(StateIndex m, int k, int n_qubits) {
  detail::check_qubit(k, n_qubits);
  detail::check_state(m, n_qubits);
  return detail::bit_at(m.offset(), k, n_qubits);
}

/// State m with qubit k toggled: +2^(N-k) when the bit was 0, -2^(N-k) otherwise.
inline StateIndex flip_bit(StateIndex m, int k, int n_qubits) {
  detail::check_qubit(k, n_qubits);
  detail::check_state(m, n_qubits);
  const auto flipped = m.offset() ^ detail::qubit_mask(k, n_qubits);
  return StateIndex{static_cast<int>(flipped) + 1};
}

inline double eigen_energy(StateIndex m, const SpinChainParams& p) {
  detail::check_state(m, p.n_qubits);
  return detail::energy_at(m.offset(), p);
}

/// E_j - E_i.
inline double energy_gap(StateIndex i, StateIndex j, const SpinChainParams& p) {
  return eigen_energy(j, p) - eigen_energy(i, p);
}

/// Eigenvalue of the neighbour-dressed frequency operator
///   Omega_k = w_k + J (S^z_{k+1} + S^z_{k-1}) + J' (S^z_{k+2} + S^z_{k-2})
/// on basis state m. Out-of-chain neighbours are omitted. Independent of xi_k.
inline double omega_eigenvalue(int k, StateIndex m, const SpinChainParams& p) {
  const int n = p.n_qubits;
  detail::check_qubit(k, n);
  detail::check_state(m, n);
  const auto off = m.offset();
  auto neighbour = [&](int q) {
    return (q >= 1 && q <= n) ? detail::parity_sign(detail::bit_at(off, q, n)) : 0.0;
  };
  return p.omegas[static_cast<std::size_t>(k - 1)] +
         0.5 * p.coupling_j * (neighbour(k + 1) + neighbour(k - 1)) +
         0.5 * p.coupling_jp * (neighbour(k + 2) + neighbour(k - 2));
}

/// Energy absorbed by raising qubit k of state m from 0 to 1, i.e.
/// E(m with xi_k = 1) - E(m with xi_k = 0). Independent of xi_k.
///
/// This is the frequency that rotates S_k^- in the interaction picture of the
/// diagonal chain Hamiltonian. It equals w_k + J (sum of neighbour signs)
/// + J' (sum of next-neighbour signs): twice the coupling weight that
/// omega_eigenvalue carries.
inline double flip_frequency(int k, StateIndex m, const SpinChainParams& p) {
  const int n = p.n_qubits;
  detail::check_qubit(k, n);
  detail::check_state(m, n);
  const auto mask = detail::qubit_mask(k, n);
  return detail::energy_at(m.offset() | mask, p) - detail::energy_at(m.offset() & ~mask, p);
}

/// All 2^N eigen-energies indexed by 0-based offset.
inline std::vector<double> spectrum(const SpinChainParams& p) {
  p.validate();
  std::vector<double> e(p.dim());
  for (std::size_t off = 0; off < e.size(); ++off) e[off] = detail::energy_at(off, p);
  return e;
}

}  // namespace spinchain

#endif  // SPINCHAIN_SPIN_REGISTER_HPP
