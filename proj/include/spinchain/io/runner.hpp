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

#ifndef SPINCHAIN_IO_RUNNER_HPP
#define SPINCHAIN_IO_RUNNER_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spinchain/catalog.hpp"
#include "spinchain/density_matrix.hpp"
#include "spinchain/entanglement.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/io/config.hpp"
#include "spinchain/io/csv.hpp"
#include "spinchain/io/svg.hpp"
#include "spinchain/lindblad.hpp"

namespace spinchain::io {

/// Observables of one recorded sample.
struct Record {
  double tau = 0.0;
  double purity = 0.0;
  double gme = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> populations;
  double coh_abs = 0.0;
  Diagnostics diag;
};

struct ScenarioResult {
  Trajectory trajectory;
  std::vector<Record> records;
};

inline Record make_record(const Sample& s, StateIndex i, StateIndex j) {
  Record r;
  r.tau = s.tau;
  r.purity = purity(s.rho);
  if (auto g = gme_for_pair(s.rho, i, j)) r.gme = *g;
  r.populations.reserve(s.rho.dim());
  for (std::size_t d = 0; d < s.rho.dim(); ++d) r.populations.push_back(s.rho(d, d).real());
  r.coh_abs = std::abs(s.rho(i.offset(), j.offset()));
  r.diag = diagnostics(s.rho);
  return r;
}

/// Integrates the configured scenario.
inline ScenarioResult simulate(const RunConfig& cfg) {
  const EnvironmentSpec env = cfg.environment();
  const DensityMatrix rho0 = initial_bell_density(cfg.pair_i, cfg.pair_j, cfg.chain.n_qubits);
  ScenarioResult result;
  result.trajectory = rk4_evolve(rho0, cfg.evolution, cfg.chain, env, [&](const Sample& s) {
    result.records.push_back(make_record(s, cfg.pair_i, cfg.pair_j));
  });
  return result;
}

inline std::string csv_header(std::size_t dim) {
  std::string h = "tau,purity,gme";
  for (std::size_t d = 1; d <= dim; ++d) h += ",p" + std::to_string(d);
  h += ",coh_abs,trace_err,herm_err,min_eig\n";
  return h;
}

inline std::string to_csv(const std::vector<Record>& records, std::size_t dim) {
  std::string out = csv_header(dim);
  for (const Record& r : records) {
    out += format_number(r.tau);
    out += ',' + format_number(r.purity);
    out += ',' + format_number(r.gme);
    for (double p : r.populations) out += ',' + format_number(p);
    out += ',' + format_number(r.coh_abs);
    out += ',' + format_number(r.diag.trace_error);
    out += ',' + format_number(r.diag.hermiticity_error);
    out += ',' + format_number(r.diag.min_eigenvalue);
    out += '\n';
  }
  return out;
}

inline std::string scenario_csv(const RunConfig& cfg) {
  return to_csv(simulate(cfg).records, cfg.chain.dim());
}

/// Path of the SVG rendered next to a CSV output.
inline std::string plot_path_for(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".svg");
  return p.string();
}

/// Runs the scenario and writes the CSV (and, with `plot`, a purity/gme SVG).
inline ScenarioResult run_scenario(const RunConfig& cfg) {
  ScenarioResult result = simulate(cfg);
  const std::string csv = to_csv(result.records, cfg.chain.dim());
  write_text_file(cfg.out, csv);
  if (cfg.plot) {
    std::istringstream in(csv);
    std::vector<std::pair<std::string, CsvTable>> tables{{cfg.out, read_csv(in, cfg.out)}};
    write_text_file(plot_path_for(cfg.out), svg_from_tables(tables, {"purity", "gme"}));
  }
  return result;
}

// ---------------------------------------------------------------------------

struct EngineComparison {
  static constexpr double kEngineThreshold = 1e-6;
  static constexpr double kClosedFormThreshold = 1e-10;

  double max_engine_diff = 0.0;
  std::optional<double> max_closed_form_diff;  // dephasing models only
  std::size_t samples = 0;

  bool pass() const {
    return max_engine_diff < kEngineThreshold &&
           (!max_closed_form_diff || *max_closed_form_diff < kClosedFormThreshold);
  }

  std::string report() const {
    std::ostringstream os;
    os << "samples compared: " << samples << "\n";
    os << "element_wise vs operator: max |drho| = " << format_number(max_engine_diff)
       << " (threshold " << format_number(kEngineThreshold) << ") "
       << (max_engine_diff < kEngineThreshold ? "PASS" : "FAIL") << "\n";
    if (max_closed_form_diff) {
      os << "element_wise vs closed form: max |drho| = " << format_number(*max_closed_form_diff)
         << " (threshold " << format_number(kClosedFormThreshold) << ") "
         << (*max_closed_form_diff < kClosedFormThreshold ? "PASS" : "FAIL") << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

/// Integrates the scenario with both engines and compares every recorded
/// sample entrywise; dephasing models are also checked against the closed form.
inline EngineComparison compare_engines(const RunConfig& cfg) {
  RunConfig a = cfg;
  a.evolution.engine = Engine::ElementWise;
  RunConfig b = cfg;
  b.evolution.engine = Engine::OperatorBuilt;
  const EnvironmentSpec env = cfg.environment();
  const DensityMatrix rho0 = initial_bell_density(cfg.pair_i, cfg.pair_j, cfg.chain.n_qubits);
  const Trajectory ta = rk4_evolve(rho0, a.evolution, cfg.chain, env);
  const Trajectory tb = rk4_evolve(rho0, b.evolution, cfg.chain, env);

  EngineComparison cmp;
  cmp.samples = ta.samples.size();
  for (std::size_t s = 0; s < ta.samples.size(); ++s) {
    cmp.max_engine_diff = std::max(cmp.max_engine_diff, max_abs_diff(ta.samples[s].rho, tb.samples[s].rho));
  }
  if (is_dephasing(env.model())) {
    double worst = 0.0;
    for (const Sample& s : ta.samples)
      worst = std::max(worst, max_abs_diff(s.rho, closed_form_dephasing(rho0, s.tau, env)));
    cmp.max_closed_form_diff = worst;
  }
  return cmp;
}

// ---------------------------------------------------------------------------

/// Linear-interpolated time at which `gme` first drops below `level`; NaN if
/// it never does within the records.
inline double first_crossing(const std::vector<Record>& records, double level = 0.5) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double g0 = records[i - 1].gme, g1 = records[i].gme;
    if (std::isnan(g0) || std::isnan(g1)) continue;
    if (g0 >= level && g1 < level) {
      const double f = (g0 - level) / (g0 - g1);
      return records[i - 1].tau + f * (records[i].tau - records[i - 1].tau);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

struct SweepOptions {
  std::string out_dir = "sweep";
  EvolutionConfig evolution{1e-3, 50.0, 10, Engine::ElementWise};
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  CatalogEntry entry;
  Model model;
  double tau_star;
  std::string csv_path;
};

inline std::string sweep_file_name(Model m, const CatalogEntry& e) {
  return std::string(model_name(m)) + "__" + e.name + ".csv";
}

inline std::string sweep_summary_csv(const std::vector<SweepRow>& rows) {
  std::string out = "state,family,i,j,model,tabulated_delta_e,computed_delta_e,tau_star\n";
  for (const auto& r : rows) {
    out += r.entry.name + "," + std::string(family_name(r.entry.family)) + "," +
           std::to_string(r.entry.i.value) + "," + std::to_string(r.entry.j.value) + "," +
           std::string(model_name(r.model)) + "," + format_number(r.entry.tabulated_delta_e) + "," +
           format_number(r.entry.computed_delta_e) + "," + format_number(r.tau_star) + "\n";
  }
  return out;
}

/// All catalog states under all four models with the reference parameters.
/// Writes one CSV per run plus summary.csv into `opts.out_dir`. Runs are
/// independent and executed on a small thread pool; output order is fixed.
inline std::vector<SweepRow> sweep(const SweepOptions& opts) {
  std::filesystem::create_directories(opts.out_dir);
  const auto entries = catalog_states();

  std::vector<SweepRow> rows;
  for (Model m : kAllModels)
    for (const auto& e : entries) rows.push_back(SweepRow{e, m, 0.0, {}});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
      try {
        SweepRow& row = rows[idx];
        RunConfig cfg;
        cfg.model = row.model;
        cfg.state_name = row.entry.name;
        cfg.pair_i = row.entry.i;
        cfg.pair_j = row.entry.j;
        cfg.evolution = opts.evolution;
        cfg.out = (std::filesystem::path(opts.out_dir) / sweep_file_name(row.model, row.entry)).string();
        const ScenarioResult res = run_scenario(cfg);
        row.tau_star = first_crossing(res.records);
        row.csv_path = cfg.out;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned n_threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(rows.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  write_text_file((std::filesystem::path(opts.out_dir) / "summary.csv").string(), sweep_summary_csv(rows));
  return rows;
}

/// Catalog with tabulated and recomputed energy gaps.
inline std::string catalog_csv() {
  std::string out = "name,family,i,j,tabulated_delta_e,computed_delta_e,difference\n";
  for (const auto& e : catalog_states()) {
    out += e.name + "," + std::string(family_name(e.family)) + "," + std::to_string(e.i.value) + "," +
           std::to_string(e.j.value) + "," + format_number(e.tabulated_delta_e) + "," +
           format_number(e.computed_delta_e) + "," +
           format_number(std::round((e.computed_delta_e - e.tabulated_delta_e) * 1e9) / 1e9) + "\n";
  }
  return out;
}

}  // namespace spinchain::io

#endif  // SPINCHAIN_IO_RUNNER_HPP
