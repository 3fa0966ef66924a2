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

// Run configuration: a line-based `key = value` format with `#` comments.
//
//   model    independent | correlated | dephasing | correlated_dephasing
//   engine   element_wise | operator
//   state    catalog name (psi_18, alpha_17, ...)   or   pair_i, pair_j
//   n_qubits chain length (default 3)
//   omega_k  Larmor frequency of qubit k; J, Jp couplings
//   gamma_k, gamma_jk   dissipation rates (one of gamma_jk / gamma_kj suffices)
//   Gamma_k, Gamma_jk   dephasing rates
//   dt, t_max, stride   integration grid and sampling
//   out, plot           output CSV path; also render an SVG next to it
//
// Omitted keys take the reference values of the three-qubit chain.

#ifndef SPINCHAIN_IO_CONFIG_HPP
#define SPINCHAIN_IO_CONFIG_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinchain/catalog.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain::io {

struct RunConfig {
  Model model = Model::IndependentDissipation;
  SpinChainParams chain = default_chain();
  RateMatrix gamma = default_rate_matrix();
  RateMatrix gamma_dephase = default_rate_matrix();
  std::string state_name = "psi_18";  // empty when an explicit pair is used
  StateIndex pair_i{1};
  StateIndex pair_j{8};
  EvolutionConfig evolution{};
  std::string out = "trajectory.csv";
  bool plot = false;
  std::vector<std::string> warnings;

  EnvironmentSpec environment() const { return EnvironmentSpec(model, gamma, gamma_dephase); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

inline double parse_double(const Entry& e, std::string_view key) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ConfigError(e.line, std::string(key) + ": expected a finite number, got '" + e.value + "'");
  }
  return v;
}

inline long parse_int(const Entry& e, std::string_view key) {
  long v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(e.line, std::string(key) + ": expected an integer, got '" + e.value + "'");
  }
  return v;
}

inline bool parse_bool(const Entry& e, std::string_view key) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw ConfigError(e.line, std::string(key) + ": expected true or false, got '" + e.value + "'");
}

// "12" -> (1, 2); "1_10" -> (1, 10); "3" -> (3, 3).
inline std::optional<std::pair<int, int>> parse_rate_suffix(std::string_view s) {
  auto all_digits = [](std::string_view t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
  };
  auto to_int = [](std::string_view t) {
    int v = 0;
    std::from_chars(t.data(), t.data() + t.size(), v);
    return v;
  };
  if (const auto us = s.find('_'); us != std::string_view::npos) {
    const auto a = s.substr(0, us), b = s.substr(us + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    return std::pair{to_int(a), to_int(b)};
  }
  if (!all_digits(s)) return std::nullopt;
  if (s.size() == 1) return std::pair{to_int(s), to_int(s)};
  if (s.size() == 2) return std::pair{to_int(s.substr(0, 1)), to_int(s.substr(1, 1))};
  return std::nullopt;
}

inline std::string valid_models() {
  std::string s;
  for (Model m : kAllModels) {
    if (!s.empty()) s += ", ";
    s += model_name(m);
  }
  return s;
}

// Fills one rate matrix from its `<prefix>_k` / `<prefix>_jk` keys.
inline void apply_rates(const std::map<std::string, Entry>& entries, const std::string& prefix,
                        int n, RateMatrix& rates) {
  std::map<std::pair<int, int>, const Entry*> seen;
  for (const auto& [key, entry] : entries) {
    if (key.rfind(prefix + "_", 0) != 0) continue;
    const auto idx = parse_rate_suffix(std::string_view(key).substr(prefix.size() + 1));
    if (!idx) throw ConfigError(entry.line, "unknown key '" + key + "'");
    const auto [j, k] = *idx;
    if (j < 1 || j > n || k < 1 || k > n) {
      throw ConfigError(entry.line, key + ": qubit index outside 1.." + std::to_string(n));
    }
    const double v = parse_double(entry, key);
    const auto canon = std::minmax(j, k);
    if (auto it = seen.find(canon); it != seen.end()) {
      if (parse_double(*it->second, key) != v) {
        throw ConfigError(entry.line, key + " = " + entry.value + " contradicts the mirrored entry on line " +
                                          std::to_string(it->second->line) +
                                          " (rate matrices are symmetric)");
      }
      continue;
    }
    seen.emplace(canon, &entry);
    rates.set(j, k, v);
  }
  for (int k = 1; k <= n; ++k) {
    if (rates(k, k) < 0.0) {
      auto it = seen.find({k, k});
      throw ConfigError(it == seen.end() ? 0 : it->second->line,
                        prefix + "_" + std::to_string(k) + " must be nonnegative");
    }
  }
  for (const auto& [jk, entry] : seen) {
    const auto [j, k] = jk;
    if (j == k) continue;
    const double bound = std::sqrt(rates(j, j) * rates(k, k));
    if (std::abs(rates(j, k)) > bound * (1.0 + 1e-12) + 1e-15) {
      std::ostringstream msg;
      msg << prefix << "_" << j << k << " = " << rates(j, k)
          << " makes the rate matrix non positive semidefinite (must not exceed sqrt(" << prefix
          << "_" << j << " * " << prefix << "_" << k << ") = " << bound << ")";
      throw ConfigError(entry->line, msg.str());
    }
  }
}

}  // namespace detail

/// Parses a configuration text. Throws ConfigError naming the offending line.
inline RunConfig parse_config(std::string_view text) {
  using detail::Entry;
  std::map<std::string, Entry> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(line_no, key + ": missing value");
    if (auto it = entries.find(key); it != entries.end()) {
      throw ConfigError(line_no, "duplicate key '" + key + "' (first set on line " +
                                     std::to_string(it->second.line) + ")");
    }
    entries.emplace(key, Entry{value, line_no});
  }

  auto take = [&](const std::string& key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  // Reject unknown keys up front so typos are not silently ignored.
  for (const auto& [key, entry] : entries) {
    static const char* kScalar[] = {"model", "engine", "state",  "pair_i", "pair_j", "n_qubits", "J",
                                    "Jp",    "dt",     "t_max", "stride", "out",    "plot"};
    bool known = false;
    for (const char* k : kScalar) known = known || key == k;
    known = known || key.rfind("omega_", 0) == 0 || key.rfind("gamma_", 0) == 0 ||
            key.rfind("Gamma_", 0) == 0;
    if (!known) throw ConfigError(entry.line, "unknown key '" + key + "'");
  }

  RunConfig cfg;

  if (const Entry* e = take("model")) {
    const auto m = parse_model(e->value);
    if (!m) {
      throw ConfigError(e->line, "unknown model '" + e->value + "' (valid: " + detail::valid_models() + ")");
    }
    cfg.model = *m;
  }
  if (const Entry* e = take("engine")) {
    const auto eng = parse_engine(e->value);
    if (!eng) {
      throw ConfigError(e->line, "unknown engine '" + e->value + "' (valid: element_wise, operator)");
    }
    cfg.evolution.engine = *eng;
  }

  int n = 3;
  if (const Entry* e = take("n_qubits")) {
    const long v = detail::parse_int(*e, "n_qubits");
    if (v < 1 || v > kMaxQubits) {
      throw ConfigError(e->line, "n_qubits must lie in 1.." + std::to_string(kMaxQubits));
    }
    n = static_cast<int>(v);
  }
  cfg.chain.n_qubits = n;
  if (n != 3) {
    cfg.chain.omegas.assign(static_cast<std::size_t>(n), 0.0);
    cfg.gamma = RateMatrix::uniform_diagonal(n, 0.05);
    cfg.gamma_dephase = RateMatrix::uniform_diagonal(n, 0.05);
  }

  std::vector<bool> omega_set(static_cast<std::size_t>(n), false);
  for (const auto& [key, entry] : entries) {
    if (key.rfind("omega_", 0) != 0) continue;
    const Entry k_entry{key.substr(6), entry.line};
    const long k = detail::parse_int(k_entry, "omega index");
    if (k < 1 || k > n) throw ConfigError(entry.line, key + ": qubit index outside 1.." + std::to_string(n));
    cfg.chain.omegas[static_cast<std::size_t>(k - 1)] = detail::parse_double(entry, key);
    omega_set[static_cast<std::size_t>(k - 1)] = true;
  }
  if (n != 3) {
    for (int k = 1; k <= n; ++k) {
      if (!omega_set[static_cast<std::size_t>(k - 1)]) {
        throw ConfigError(0, "omega_" + std::to_string(k) + " is required when n_qubits != 3");
      }
    }
  }
  if (const Entry* e = take("J")) cfg.chain.coupling_j = detail::parse_double(*e, "J");
  if (const Entry* e = take("Jp")) cfg.chain.coupling_jp = detail::parse_double(*e, "Jp");

  detail::apply_rates(entries, "gamma", n, cfg.gamma);
  detail::apply_rates(entries, "Gamma", n, cfg.gamma_dephase);

  const Entry* state = take("state");
  const Entry* pi = take("pair_i");
  const Entry* pj = take("pair_j");
  if (state && (pi || pj)) {
    throw ConfigError((pi ? pi : pj)->line, "give either 'state' or 'pair_i'/'pair_j', not both");
  }
  if (pi || pj) {
    if (!pi || !pj) throw ConfigError((pi ? pi : pj)->line, "pair_i and pair_j must be given together");
    const long i = detail::parse_int(*pi, "pair_i");
    const long j = detail::parse_int(*pj, "pair_j");
    const long dim = 1L << n;
    if (i < 1 || i > dim) throw ConfigError(pi->line, "pair_i outside 1.." + std::to_string(dim));
    if (j < 1 || j > dim) throw ConfigError(pj->line, "pair_j outside 1.." + std::to_string(dim));
    if (i == j) throw ConfigError(pj->line, "pair_i and pair_j must differ");
    cfg.state_name.clear();
    cfg.pair_i = StateIndex{static_cast<int>(i)};
    cfg.pair_j = StateIndex{static_cast<int>(j)};
  } else {
    const std::string name = state ? state->value : std::string("psi_18");
    if (n != 3) {
      throw ConfigError(state ? state->line : 0,
                        "catalog states need n_qubits = 3; use pair_i/pair_j instead");
    }
    const auto entry = find_catalog_entry(name);
    if (!entry) {
      std::string names;
      for (const auto& c : catalog_states()) names += (names.empty() ? "" : ", ") + c.name;
      throw ConfigError(state ? state->line : 0, "unknown state '" + name + "' (valid: " + names + ")");
    }
    cfg.state_name = name;
    cfg.pair_i = entry->i;
    cfg.pair_j = entry->j;
  }

  if (const Entry* e = take("dt")) {
    cfg.evolution.dt = detail::parse_double(*e, "dt");
    if (cfg.evolution.dt <= 0.0) throw ConfigError(e->line, "dt must be positive");
  }
  if (const Entry* e = take("t_max")) {
    cfg.evolution.t_max = detail::parse_double(*e, "t_max");
    if (cfg.evolution.t_max < 0.0) throw ConfigError(e->line, "t_max must be >= 0");
  }
  if (const Entry* e = take("stride")) {
    const long s = detail::parse_int(*e, "stride");
    if (s < 1) throw ConfigError(e->line, "stride must be >= 1");
    cfg.evolution.record_stride = static_cast<std::size_t>(s);
  }
  if (const Entry* e = take("out")) cfg.out = e->value;
  if (const Entry* e = take("plot")) cfg.plot = detail::parse_bool(*e, "plot");

  const EnvironmentSpec env = cfg.environment();
  if (!env.active_rates_psd()) {
    std::ostringstream msg;
    msg << "active rate matrix is not positive semidefinite (min eigenvalue "
        << env.active_rates().min_eigenvalue() << "); complete positivity is not guaranteed";
    cfg.warnings.push_back(msg.str());
  }
  return cfg;
}

}  // namespace spinchain::io

#endif  // SPINCHAIN_IO_CONFIG_HPP
