// Copyright 2026 The entsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line driver. Every experiment is a subcommand that emits a
// machine-readable report (json/csv) or an aligned table; exit status is 0 on
// success, 2 on a configuration problem, 3 when a verification subcommand's
// internal assertion fails.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "entsim/errors.hpp"
#include "entsim/report.hpp"
#include "entsim/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using entsim::RunConfig;

// Values from --config seed the bound variables before parsing, so explicit
// flags win (CLI11 only writes options that actually appear).
nlohmann::json load_config_file(int argc, char **argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      std::ifstream in(argv[i + 1]);
      if (!in) {
        throw entsim::validation_error(std::string("cannot open config file ") + argv[i + 1]);
      }
      nlohmann::json j;
      in >> j;
      return j;
    }
  }
  return nlohmann::json::object();
}

void add_common(CLI::App *cmd, RunConfig &c) {
  cmd->add_option("--config", "JSON config file; explicit flags override it")
      ->type_name("FILE")
      ->expected(1);
  cmd->add_option("--seed", c.seed, "random seed (64-bit)")->capture_default_str();
  cmd->add_option("--format", c.format, "output format: json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write the report to this path instead of stdout");
  cmd->add_flag("--parallel", c.parallel,
                "run Monte Carlo kernels with OpenMP (bit-identical to serial)");
}

void add_samples(CLI::App *cmd, RunConfig &c) {
  cmd->add_option("--samples", c.samples, "Monte Carlo sample count (>= 100)")
      ->capture_default_str();
}

void add_grid(CLI::App *cmd, RunConfig &c) {
  cmd->add_option("--grid-start", c.grid_start_deg, "first grid angle, degrees")
      ->capture_default_str();
  cmd->add_option("--grid-stop", c.grid_stop_deg, "last grid angle, degrees")
      ->capture_default_str();
  cmd->add_option("--grid-step", c.grid_step_deg, "grid step, degrees");
}

void add_model(CLI::App *cmd, RunConfig &c, const std::vector<std::string> &allowed) {
  cmd->add_option("--model", c.model, "correlation model")->check(CLI::IsMember(allowed));
}

}  // namespace

int main(int argc, char **argv) {
  nlohmann::json file_json;
  RunConfig config;
  try {
    file_json = load_config_file(argc, argv);
    config = RunConfig::from_json(file_json);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"entanglement gedanken-experiment simulator and verification harness"};
  app.set_version_flag("--version", std::string(entsim::kArtifactVersion));
  app.require_subcommand(1);
  app.add_option("--config", "JSON config file; explicit flags override it")
      ->type_name("FILE")
      ->expected(1);

  CLI::App *sweep = app.add_subcommand(
      "singlet-sweep", "closed form vs Monte Carlo pair correlation over an angle grid");
  add_grid(sweep, config);
  add_samples(sweep, config);
  add_common(sweep, config);

  CLI::App *ghz = app.add_subcommand(
      "ghz-check", "three-particle parity verification: eigenvalues and the 0/64 count");
  add_common(ghz, config);

  CLI::App *bell =
      app.add_subcommand("bell-test", "evaluate 1 + P(b,c) >= |P(a,b) - P(a,c)| on one triple");
  bell->add_option("--angles", config.angles_deg, "axis angles a,b,c in degrees")
      ->delimiter(',')
      ->expected(3);
  bell->add_option("--tolerance", config.tolerance, "inequality tolerance for closed forms")
      ->capture_default_str();
  add_model(bell, config, {"qm", "sign", "sign-mc"});
  add_samples(bell, config);
  add_common(bell, config);

  CLI::App *scan =
      app.add_subcommand("bell-scan", "evaluate the inequality over a theta1 x theta2 grid");
  add_grid(scan, config);
  scan->add_option("--tolerance", config.tolerance, "inequality tolerance for closed forms")
      ->capture_default_str();
  add_model(scan, config, {"qm", "sign", "sign-mc"});
  add_samples(scan, config);
  add_common(scan, config);

  CLI::App *chsh = app.add_subcommand("chsh", "four-setting combination of correlations");
  chsh->add_option("--angles", config.angles_deg, "axis angles a,a',b,b' in degrees")
      ->delimiter(',')
      ->expected(4);
  add_model(chsh, config, {"qm", "sign", "sign-mc"});
  add_samples(chsh, config);
  add_common(chsh, config);

  CLI::App *compare = app.add_subcommand(
      "lhv-compare", "hidden-variable model vs quantum correlation over an angle grid");
  add_grid(compare, config);
  add_model(compare, config, {"sign", "sign-mc"});
  add_samples(compare, config);
  add_common(compare, config);

  CLI::App *ledger =
      app.add_subcommand("ledger-demo", "simulate one pair and print its knowledge ledger");
  ledger->add_option("--angles", config.angles_deg, "axis angles a,b in degrees")
      ->delimiter(',')
      ->expected(2);
  ledger->add_option("--t0", config.t0, "time of the first measurement")->capture_default_str();
  ledger->add_option("--t1", config.t1, "time of the second measurement")->capture_default_str();
  ledger->add_flag("!--no-separation", config.separation,
                   "drop the space-like separation assertion");
  add_common(ledger, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  CLI::App *sub = app.get_subcommands().front();
  config.subcommand = sub->get_name();

  // Per-subcommand defaults that neither a flag nor the config file set.
  if (sub == scan && sub->count("--grid-step") == 0 && !file_json.contains("grid_step_deg")) {
    config.grid_step_deg = 10.0;  // 19 x 19 grid
  }
  if (sub == compare && sub->count("--model") == 0 && !file_json.contains("model")) {
    config.model = "sign";
  }

  try {
    entsim::Report report = entsim::run_command(config);
    std::string text = entsim::render(report);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << config.out << "\n";
        return 2;
      }
      out << text;
    }
    return report.verification_status;
  } catch (const entsim::validation_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
