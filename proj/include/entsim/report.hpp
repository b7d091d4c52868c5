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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entsim/mc.hpp"

#include "json.hpp"

namespace entsim {

/// Everything needed to reproduce a run bit-exactly. Serialized into every
/// report; angles are degrees on this surface and converted at the point of
/// use.
struct RunConfig {
  std::string subcommand;
  std::string model = "qm";  // qm | sign | sign-mc
  std::vector<double> angles_deg;
  double grid_start_deg = 0.0;
  double grid_stop_deg = 180.0;
  double grid_step_deg = 15.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::string format = "table";  // json | csv | table
  std::string out;               // empty = stdout
  bool parallel = false;
  double t0 = 1.0;  // ledger-demo measurement times
  double t1 = 2.0;
  bool separation = true;

  nlohmann::json to_json() const;
  /// Missing keys keep their defaults, so partial configs merge cleanly.
  static RunConfig from_json(const nlohmann::json &j);

  std::vector<double> grid() const;  // inclusive start..stop by step
};

struct Report {
  RunConfig config;
  RunMetadata metadata;
  nlohmann::json results;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> summary_lines;  // table-format trailer
  bool table_prefers_summary = false;      // table format: skip the generic grid
  int verification_status = 0;  // 0 ok, 3 = a verification subcommand's internal check failed
};

/// %.17g: round-trips doubles exactly, '.' decimal separator always.
std::string format_double(double v);

std::string to_json_string(const Report &report);
std::string to_csv_string(const Report &report);
std::string to_table_string(const Report &report);
std::string render(const Report &report);  // honors config.format

/// Recover the embedded config from a report ("# config: {...}" line for CSV,
/// the "config" object for JSON).
RunConfig config_from_report_json(const std::string &text);
RunConfig config_from_report_csv(const std::string &text);

/// Run one subcommand; throws validation_error on a bad config.
Report run_command(const RunConfig &config);

Report run_singlet_sweep(const RunConfig &config);
Report run_ghz_check(const RunConfig &config);
Report run_bell_test(const RunConfig &config);
Report run_bell_scan(const RunConfig &config);
Report run_chsh(const RunConfig &config);
Report run_lhv_compare(const RunConfig &config);
Report run_ledger_demo(const RunConfig &config);

}  // namespace entsim
