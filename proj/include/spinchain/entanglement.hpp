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

// Purity, partial trace and GME-concurrence lower bounds for the 3-qubit
// two-basis-state catalog. Qubits are labelled A, B, C = 1, 2, 3.

#ifndef SPINCHAIN_ENTANGLEMENT_HPP
#define SPINCHAIN_ENTANGLEMENT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "spinchain/density_matrix.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/lindblad.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain {

enum class EntanglementFamily { ABC, AB, BC, AC };

inline constexpr std::array<EntanglementFamily, 4> kAllFamilies{
    EntanglementFamily::ABC, EntanglementFamily::AB, EntanglementFamily::BC,
    EntanglementFamily::AC};

constexpr std::string_view family_name(EntanglementFamily f) {
  switch (f) {
    case EntanglementFamily::ABC: return "ABC";
    case EntanglementFamily::AB: return "AB";
    case EntanglementFamily::BC: return "BC";
    case EntanglementFamily::AC: return "AC";
  }
  return "?";
}

/// Qubit removed by the partial trace (the letter missing from the family
/// name); 0 for ABC.
constexpr int traced_qubit(EntanglementFamily f) {
  switch (f) {
    case EntanglementFamily::AB: return 3;
    case EntanglementFamily::BC: return 1;
    case EntanglementFamily::AC: return 2;
    case EntanglementFamily::ABC: return 0;
  }
  return 0;
}

using StatePair = std::pair<StateIndex, StateIndex>;

/// Family of a two-basis-state superposition on three qubits, decided by
/// which qubits differ between the two states. Pairs differing in a single
/// qubit belong to no family.
inline std::optional<EntanglementFamily> family_of(StateIndex i, StateIndex j) {
  detail::check_state(i, 3);
  detail::check_state(j, 3);
  const auto diff = i.offset() ^ j.offset();
  switch (diff) {
    case 0b111: return EntanglementFamily::ABC;
    case 0b110: return EntanglementFamily::AB;
    case 0b011: return EntanglementFamily::BC;
    case 0b101: return EntanglementFamily::AC;
    default: return std::nullopt;
  }
}

inline double purity(const CMatrix& rho) {
  double p = 0.0;
  for (const Complex& z : rho.entries()) p += std::norm(z);
  return p;
}

inline double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

/// Reduced 4x4 state of the two kept qubits of a 3-qubit register, kept
/// qubits in chain order (A before B before C).
inline CMatrix partial_trace(const CMatrix& rho, int traced) {
  if (rho.dim() != 8) {
    throw UnsupportedError("partial_trace is implemented for 3-qubit registers only");
  }
  detail::check_qubit(traced, 3);
  std::array<int, 2> kept{};
  for (int q = 1, idx = 0; q <= 3; ++q)
    if (q != traced) kept[static_cast<std::size_t>(idx++)] = q;

  auto full_index = [&](std::size_t two, int traced_bit) {
    std::size_t off = 0;
    const int hi = static_cast<int>((two >> 1) & 1u);
    const int lo = static_cast<int>(two & 1u);
    if (hi) off |= detail::qubit_mask(kept[0], 3);
    if (lo) off |= detail::qubit_mask(kept[1], 3);
    if (traced_bit) off |= detail::qubit_mask(traced, 3);
    return off;
  };

  CMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (int t = 0; t < 2; ++t) out(r, c) += rho(full_index(r, t), full_index(c, t));
  return out;
}

inline CMatrix partial_trace(const DensityMatrix& rho, int traced) {
  return partial_trace(rho.matrix(), traced);
}

namespace detail {

inline void require_three_qubits(const CMatrix& rho) {
  if (rho.dim() != 8) throw UnsupportedError("GME-concurrence bounds need a 3-qubit register");
}

// Rounding can push an evolved population to -1e-17; keep the root real.
inline double root_product(double a, double b) { return std::sqrt(std::max(0.0, a * b)); }

inline constexpr std::array<StatePair, 4> kAbcPairs{
    StatePair{StateIndex{1}, StateIndex{8}}, StatePair{StateIndex{2}, StateIndex{7}},
    StatePair{StateIndex{3}, StateIndex{6}}, StatePair{StateIndex{4}, StateIndex{5}}};

inline StatePair ordered(StateIndex i, StateIndex j) { return i < j ? StatePair{i, j} : StatePair{j, i}; }

}  // namespace detail

/// Separable two-copy product |Phi> = |i j k l> over the two kept qubits.
struct PhiDigits {
  int i, j, k, l;
};

/// Two-copy lower bound on a two-qubit reduced state:
///   C/2 = |<il| rho |kj>| - sqrt(<ij| rho |ij> <kl| rho |kl>),
/// returned as C (not clamped).
inline double two_qubit_gme_bound(const CMatrix& rho2, PhiDigits phi) {
  if (rho2.dim() != 4) throw ArgumentError("two-qubit bound needs a 4x4 matrix");
  auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * a + b); };
  const double coherence = std::abs(rho2(idx(phi.i, phi.l), idx(phi.k, phi.j)));
  const double pop_ij = rho2(idx(phi.i, phi.j), idx(phi.i, phi.j)).real();
  const double pop_kl = rho2(idx(phi.k, phi.l), idx(phi.k, phi.l)).real();
  return 2.0 * (coherence - detail::root_product(pop_ij, pop_kl));
}

/// |Phi> selecting the reduced coherence of the pair: |0110> picks
/// <00|rho|11> against the |01>,|10> populations, |0011> picks <01|rho|10>
/// against |00>,|11>.
inline PhiDigits phi_for_pair(StateIndex i, StateIndex j) {
  const auto fam = family_of(i, j);
  if (!fam || *fam == EntanglementFamily::ABC) {
    throw ArgumentError("pair (" + std::to_string(i.value) + "," + std::to_string(j.value) +
                        ") is not a bipartite catalog pair");
  }
  const int traced = traced_qubit(*fam);
  // Bit of state i on the first kept qubit; the two kept bits of i are equal
  // exactly when the reduced pair is {|00>, |11>}.
  int bits[2];
  for (int q = 1, idx = 0; q <= 3; ++q)
    if (q != traced) bits[idx++] = detail::bit_at(i.offset(), q, 3);
  if (bits[0] == bits[1]) return PhiDigits{0, 1, 1, 0};
  return PhiDigits{0, 0, 1, 1};
}

/// Three-qubit bound for the ABC family:
///   2|rho_ij| - 2 sum over the other three ABC pairs (p,q) of sqrt(rho_pp rho_qq).
inline double gme_abc(const CMatrix& rho, StateIndex i, StateIndex j) {
  detail::require_three_qubits(rho);
  const auto pair = detail::ordered(i, j);
  const auto it = std::find(detail::kAbcPairs.begin(), detail::kAbcPairs.end(), pair);
  if (it == detail::kAbcPairs.end()) {
    throw ArgumentError("pair (" + std::to_string(i.value) + "," + std::to_string(j.value) +
                        ") is not in the ABC family");
  }
  double value = 2.0 * std::abs(rho(pair.first.offset(), pair.second.offset()));
  for (const auto& [p, q] : detail::kAbcPairs) {
    if (StatePair{p, q} == pair) continue;
    value -= 2.0 * detail::root_product(rho(p.offset(), p.offset()).real(),
                                        rho(q.offset(), q.offset()).real());
  }
  return value;
}

/// Bipartite bound: partial trace over the missing qubit, then the
/// two-qubit bound with the |Phi> assigned to the pair.
inline double gme_pair(const CMatrix& rho, EntanglementFamily family, StateIndex i, StateIndex j) {
  detail::require_three_qubits(rho);
  if (family == EntanglementFamily::ABC) throw ArgumentError("gme_pair is for bipartite families");
  const auto actual = family_of(i, j);
  if (actual != family) {
    throw ArgumentError("pair (" + std::to_string(i.value) + "," + std::to_string(j.value) +
                        ") is not in the " + std::string(family_name(family)) + " family");
  }
  return two_qubit_gme_bound(partial_trace(rho, traced_qubit(family)), phi_for_pair(i, j));
}

/// Bound for any catalog-type pair; nullopt when the pair has no family or
/// the register is not three qubits.
inline std::optional<double> gme_for_pair(const CMatrix& rho, StateIndex i, StateIndex j) {
  if (rho.dim() != 8) return std::nullopt;
  const auto fam = family_of(i, j);
  if (!fam) return std::nullopt;
  if (*fam == EntanglementFamily::ABC) return gme_abc(rho, i, j);
  return gme_pair(rho, *fam, i, j);
}

struct DecayOracle {
  double gme = 0.0;
  double purity = 0.0;
};

/// Closed-form GME bound and purity of the Bell state (|i> + |j>)/sqrt(2)
/// under a dephasing model:
///   gme(t)    = 2|rho_ij(0)| exp(-R_ij t)
///   purity(t) = rho_ii(0)^2 + rho_jj(0)^2 + 2|rho_ij(0)|^2 exp(-2 R_ij t)
inline DecayOracle analytic_decay_oracle(EntanglementFamily family, StateIndex i, StateIndex j,
                                         const EnvironmentSpec& env, double t) {
  detail::require_dephasing(env, "analytic_decay_oracle");
  if (env.n_qubits() != 3) throw UnsupportedError("decay oracle covers 3-qubit registers");
  if (family_of(i, j) != family) {
    throw ArgumentError("pair (" + std::to_string(i.value) + "," + std::to_string(j.value) +
                        ") is not in the " + std::string(family_name(family)) + " family");
  }
  constexpr double pop = 0.5;
  constexpr double coh = 0.5;
  const double r = dephasing_rate(i, j, env);
  return DecayOracle{2.0 * coh * std::exp(-r * t),
                     pop * pop + pop * pop + 2.0 * coh * coh * std::exp(-2.0 * r * t)};
}

}  // namespace spinchain

#endif  // SPINCHAIN_ENTANGLEMENT_HPP
