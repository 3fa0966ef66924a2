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

// Command-line front end. Exit codes: 0 success, 1 configuration or usage
// error (including I/O), 2 numerical failure, 3 engine comparison failure.

#ifndef SPINCHAIN_IO_CLI_HPP
#define SPINCHAIN_IO_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinchain/errors.hpp"
#include "spinchain/io/config.hpp"
#include "spinchain/io/csv.hpp"
#include "spinchain/io/runner.hpp"
#include "spinchain/io/svg.hpp"

namespace spinchain::io {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitNumerical = 2, kExitComparison = 3 };

inline RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

/// Runs the CLI on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decoherence of two-basis-state entangled states in an Ising spin chain", "spinchain"};
  app.require_subcommand(1);

  std::string config_path;
  auto* simulate_cmd = app.add_subcommand("simulate", "Integrate one scenario and write its CSV trajectory");
  simulate_cmd->add_option("config", config_path, "Configuration file")->required();

  std::string compare_path;
  auto* compare_cmd =
      app.add_subcommand("compare-engines", "Integrate with both engines and compare trajectories");
  compare_cmd->add_option("config", compare_path, "Configuration file")->required();

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every catalog state under all four models");
  sweep_cmd->add_option("--out", sweep_opts.out_dir, "Output directory")->capture_default_str();
  sweep_cmd->add_option("--t-max", sweep_opts.evolution.t_max, "Final time")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads (0: all cores)");

  std::vector<std::string> plot_inputs;
  std::vector<std::string> plot_columns;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Render CSV columns against tau as an SVG line chart");
  plot_cmd->add_option("csv", plot_inputs, "Input CSV files")->required();
  plot_cmd->add_option("--columns", plot_columns, "Columns to draw")->required()->delimiter(',');
  plot_cmd->add_option("--out", plot_out, "Output SVG path")->required();

  std::string catalog_out;
  auto* catalog_cmd = app.add_subcommand("catalog", "Print the entangled-state catalog with energy gaps");
  catalog_cmd->add_option("--out", catalog_out, "Write the CSV to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  try {
    if (simulate_cmd->parsed()) {
      const RunConfig cfg = load_config_file(config_path);
      for (const auto& w : cfg.warnings) err << "warning: " << w << "\n";
      const ScenarioResult res = run_scenario(cfg);
      out << "wrote " << res.records.size() << " samples to " << cfg.out << "\n";
      if (cfg.plot) out << "wrote plot to " << plot_path_for(cfg.out) << "\n";
      return kExitOk;
    }
    if (compare_cmd->parsed()) {
      const RunConfig cfg = load_config_file(compare_path);
      for (const auto& w : cfg.warnings) err << "warning: " << w << "\n";
      const EngineComparison cmp = compare_engines(cfg);
      out << cmp.report();
      return cmp.pass() ? kExitOk : kExitComparison;
    }
    if (sweep_cmd->parsed()) {
      const auto rows = sweep(sweep_opts);
      out << "wrote " << rows.size() << " runs and summary.csv to " << sweep_opts.out_dir << "\n";
      return kExitOk;
    }
    if (plot_cmd->parsed()) {
      emit_svg_plot(plot_inputs, plot_columns, plot_out);
      out << "wrote " << plot_out << "\n";
      return kExitOk;
    }
    if (catalog_cmd->parsed()) {
      const std::string csv = catalog_csv();
      if (catalog_out.empty()) {
        out << csv;
      } else {
        write_text_file(catalog_out, csv);
        out << "wrote " << catalog_out << "\n";
      }
      return kExitOk;
    }
  } catch (const DivergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace spinchain::io

#endif  // SPINCHAIN_IO_CLI_HPP
