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

#ifndef SPINCHAIN_CATALOG_HPP
#define SPINCHAIN_CATALOG_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinchain/entanglement.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain {

/// Reference chain: w = (400, 200, 100), J = 10, J' = 0.4 (2*pi*MHz).
inline SpinChainParams default_chain() { return SpinChainParams{}; }

/// Reference dissipation rates: gamma_k = 0.05, gamma_12 = 0.05,
/// gamma_23 = 0.025, gamma_13 = 0.0125. The dephasing matrix uses the same
/// numbers.
inline RateMatrix default_rate_matrix() {
  RateMatrix r = RateMatrix::uniform_diagonal(3, 0.05);
  r.set(1, 2, 0.05);
  r.set(2, 3, 0.025);
  r.set(1, 3, 0.0125);
  return r;
}

inline EnvironmentSpec default_environment(Model model) {
  return EnvironmentSpec(model, default_rate_matrix(), default_rate_matrix());
}

struct DefaultParameters {
  SpinChainParams chain;
  std::array<EnvironmentSpec, 4> environments;  // indexed like kAllModels
};

inline DefaultParameters default_parameters() {
  return DefaultParameters{default_chain(),
                           {default_environment(kAllModels[0]), default_environment(kAllModels[1]),
                            default_environment(kAllModels[2]), default_environment(kAllModels[3])}};
}

struct CatalogEntry {
  std::string name;
  EntanglementFamily family;
  StateIndex i;
  StateIndex j;
  double tabulated_delta_e;     // as tabulated in the source table
  double computed_delta_e;  // E_j - E_i from the chain spectrum
};

/// The sixteen two-basis-state entangled states, four per family. The
/// tabulated gaps of the bipartite rows do not all agree with the spectrum;
/// both values are kept.
inline std::vector<CatalogEntry> catalog_states(const SpinChainParams& chain = default_chain()) {
  struct Row {
    const char* name;
    EntanglementFamily family;
    int i, j;
    double tabulated;
  };
  using F = EntanglementFamily;
  static constexpr Row kRows[] = {
      {"psi_18", F::ABC, 1, 8, 700.0},  {"psi_27", F::ABC, 2, 7, 500.0},
      {"psi_36", F::ABC, 3, 6, 300.0},  {"psi_45", F::ABC, 4, 5, 100.0},
      {"alpha_17", F::AB, 1, 7, 605.2}, {"alpha_28", F::AB, 2, 8, 594.8},
      {"alpha_46", F::AB, 4, 6, 209.8}, {"alpha_35", F::AB, 3, 5, 195.2},
      {"beta_14", F::BC, 1, 4, 305.2},  {"beta_58", F::BC, 5, 8, 294.8},
      {"beta_23", F::BC, 2, 3, 104.8},  {"beta_67", F::BC, 6, 7, 95.2},
      {"xi_16", F::AC, 1, 6, 510.0},    {"xi_38", F::AC, 3, 8, 490.0},
      {"xi_25", F::AC, 2, 5, 300.0},    {"xi_47", F::AC, 4, 7, 300.0},
  };
  std::vector<CatalogEntry> out;
  out.reserve(std::size(kRows));
  for (const Row& r : kRows) {
    const StateIndex i{r.i}, j{r.j};
    out.push_back(CatalogEntry{r.name, r.family, i, j, r.tabulated, energy_gap(i, j, chain)});
  }
  return out;
}

inline std::optional<CatalogEntry> find_catalog_entry(std::string_view name,
                                                      const SpinChainParams& chain = default_chain()) {
  for (auto& e : catalog_states(chain))
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace spinchain

#endif  // SPINCHAIN_CATALOG_HPP
