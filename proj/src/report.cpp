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

#include "entsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"
#include "entsim/ghz.hpp"
#include "entsim/lhv.hpp"
#include "entsim/sequential.hpp"
#include "entsim/version.hpp"

namespace entsim {

namespace {

const char *kCsvMagic = "# entsim-report";

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

ExecMode mode_of(const RunConfig &c) {
  return c.parallel ? ExecMode::parallel : ExecMode::serial;
}

void require_samples(const RunConfig &c) {
  if (c.samples < 100) {
    throw validation_error("Monte Carlo subcommands need --samples >= 100");
  }
}

void require_angles(const RunConfig &c, std::size_t n, const char *what) {
  if (c.angles_deg.size() != n) {
    throw validation_error(std::string(what) + ": expected " + std::to_string(n) +
                           " angles (degrees), got " + std::to_string(c.angles_deg.size()));
  }
}

RunMetadata metadata_for(const RunConfig &c, std::uint64_t samples_used) {
  RunMetadata m;
  m.seed = RandomSeed{c.seed};
  m.samples = samples_used;
  m.artifact_version = kArtifactVersion;
  return m;
}

CorrelationFn closed_form_for(const std::string &model) {
  if (model == "qm") return qm_correlation();
  if (model == "sign") return exact_correlation_of(builtin_sign_model());
  throw validation_error("unknown closed-form model '" + model + "' (use qm or sign)");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json RunConfig::to_json() const {
  return nlohmann::json{{"subcommand", subcommand},
                        {"model", model},
                        {"angles_deg", angles_deg},
                        {"grid_start_deg", grid_start_deg},
                        {"grid_stop_deg", grid_stop_deg},
                        {"grid_step_deg", grid_step_deg},
                        {"samples", samples},
                        {"seed", seed},
                        {"tolerance", tolerance},
                        {"format", format},
                        {"out", out},
                        {"parallel", parallel},
                        {"t0", t0},
                        {"t1", t1},
                        {"separation", separation}};
}

RunConfig RunConfig::from_json(const nlohmann::json &j) {
  RunConfig c;
  c.subcommand = j.value("subcommand", c.subcommand);
  c.model = j.value("model", c.model);
  c.angles_deg = j.value("angles_deg", c.angles_deg);
  c.grid_start_deg = j.value("grid_start_deg", c.grid_start_deg);
  c.grid_stop_deg = j.value("grid_stop_deg", c.grid_stop_deg);
  c.grid_step_deg = j.value("grid_step_deg", c.grid_step_deg);
  c.samples = j.value("samples", c.samples);
  c.seed = j.value("seed", c.seed);
  c.tolerance = j.value("tolerance", c.tolerance);
  c.format = j.value("format", c.format);
  c.out = j.value("out", c.out);
  c.parallel = j.value("parallel", c.parallel);
  c.t0 = j.value("t0", c.t0);
  c.t1 = j.value("t1", c.t1);
  c.separation = j.value("separation", c.separation);
  return c;
}

std::vector<double> RunConfig::grid() const {
  if (!(grid_step_deg > 0.0)) throw validation_error("grid step must be positive");
  if (grid_stop_deg < grid_start_deg) throw validation_error("grid stop is before grid start");
  // fixed point count, values by multiplication: no accumulation drift
  auto count = static_cast<std::size_t>(
                   std::floor((grid_stop_deg - grid_start_deg) / grid_step_deg + 1e-9)) +
               1;
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = grid_start_deg + static_cast<double>(i) * grid_step_deg;
  }
  return g;
}

Report run_singlet_sweep(const RunConfig &config) {
  require_samples(config);
  std::vector<double> grid = config.grid();

  ParamSampler sampler = [](double theta_deg, RandomStream &rng) {
    UnitVector3 a = UnitVector3::in_plane_deg(0.0);
    UnitVector3 b = UnitVector3::in_plane_deg(theta_deg);
    PairSample s = simulate_pair(a, b, rng);
    return static_cast<double>(s.s_e * s.s_p);
  };
  std::vector<SweepRow> rows =
      sweep(sampler, grid, config.samples, RandomSeed{config.seed}, mode_of(config));

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, config.samples);
  rep.csv_header = {"theta_deg", "closed_form", "mc_mean", "mc_stderr"};
  nlohmann::json points = nlohmann::json::array();
  for (const SweepRow &r : rows) {
    double closed = sequential_correlation_closed_form(deg_to_rad(r.param));
    points.push_back({{"theta_deg", r.param},
                      {"closed_form", closed},
                      {"mc_mean", r.est.mean},
                      {"mc_stderr", r.est.std_error},
                      {"n", r.est.n}});
    rep.csv_rows.push_back({format_double(r.param), format_double(closed),
                            format_double(r.est.mean), format_double(r.est.std_error)});
  }
  rep.results = {{"points", points}};
  return rep;
}

Report run_ghz_check(const RunConfig &config) {
  std::array<GhzEigenCheck, 4> checks = verify_ghz_eigenvalues();
  int all = count_satisfying_all();
  int eplus_only = count_satisfying(true, false);
  int eminus_only = count_satisfying(false, true);
  LemmaReport lemmas = lemma_checks();

  // Exhaustive-enumeration constants: the three +1 parities pin the x triple
  // for each of the 8 y triples (so 8), and half of the 64 tables have a
  // negative x product (so 32).
  bool ok = all == 0 && eplus_only == 8 && eminus_only == 32 && lemmas.first_form_holds &&
            lemmas.second_form_holds;
  nlohmann::json eigen = nlohmann::json::array();
  for (const GhzEigenCheck &c : checks) {
    ok = ok && c.ok;
    eigen.push_back({{"observable", c.observable},
                     {"expected", c.expected},
                     {"eigenvalue", c.eigenvalue},
                     {"residual", c.residual},
                     {"ok", c.ok}});
  }

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, 0);
  rep.verification_status = ok ? 0 : 3;
  rep.results = {{"eigenvalue_checks", eigen},
                 {"counts",
                  {{"total", 64},
                   {"satisfying_all", all},
                   {"eplus_only", eplus_only},
                   {"eminus_only", eminus_only}}},
                 {"lemmas",
                  {{"first_form_holds", lemmas.first_form_holds},
                   {"second_form_holds", lemmas.second_form_holds},
                   {"sy_triples_checked", lemmas.sy_triples_checked},
                   {"x_branches_checked", lemmas.x_branches_checked}}},
                 {"ok", ok}};
  rep.csv_header = {"check", "expected", "actual", "ok"};
  for (const GhzEigenCheck &c : checks) {
    rep.csv_rows.push_back({"eigenvalue_" + c.observable, format_double(c.expected),
                            format_double(c.eigenvalue), fmt_bool(c.ok)});
  }
  rep.csv_rows.push_back({"satisfying_all", "0", std::to_string(all), fmt_bool(all == 0)});
  rep.csv_rows.push_back(
      {"eplus_only", "8", std::to_string(eplus_only), fmt_bool(eplus_only == 8)});
  rep.csv_rows.push_back(
      {"eminus_only", "32", std::to_string(eminus_only), fmt_bool(eminus_only == 32)});
  rep.csv_rows.push_back({"lemma_first_form", "true", fmt_bool(lemmas.first_form_holds),
                          fmt_bool(lemmas.first_form_holds)});
  rep.csv_rows.push_back({"lemma_second_form", "true", fmt_bool(lemmas.second_form_holds),
                          fmt_bool(lemmas.second_form_holds)});
  rep.summary_lines.push_back(std::string("verification ") + (ok ? "passed" : "FAILED") +
                              ": pre-assigned tables satisfying all four parities: " +
                              std::to_string(all) + "/64");
  return rep;
}

namespace {

void push_bell_row(Report &rep, double theta1, double theta2, const BellTestResult &r) {
  rep.csv_rows.push_back({format_double(theta1), format_double(theta2), format_double(r.lhs),
                          format_double(r.rhs), format_double(r.margin), fmt_bool(r.holds),
                          format_double(r.std_error)});
}

nlohmann::json bell_json(const BellTestResult &r) {
  return {{"lhs", r.lhs},         {"rhs", r.rhs},
          {"margin", r.margin},   {"stderr", r.std_error},
          {"holds", r.holds},     {"tolerance", r.tolerance}};
}

}  // namespace

Report run_bell_test(const RunConfig &config) {
  require_angles(config, 3, "bell-test");
  double a = config.angles_deg[0], b = config.angles_deg[1], c = config.angles_deg[2];

  BellTestResult r;
  std::uint64_t samples_used = 0;
  if (config.model == "sign-mc") {
    require_samples(config);
    samples_used = config.samples;
    r = bell_test_mc(builtin_sign_model(), UnitVector3::in_plane_deg(a),
                     UnitVector3::in_plane_deg(b), UnitVector3::in_plane_deg(c), config.samples,
                     RandomSeed{config.seed}, mode_of(config));
  } else {
    r = bell_test_deg(closed_form_for(config.model), a, b, c, config.tolerance);
  }

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, samples_used);
  rep.results = bell_json(r);
  rep.results["angles_deg"] = config.angles_deg;
  rep.csv_header = {"theta1", "theta2", "lhs", "rhs", "margin", "holds", "stderr"};
  push_bell_row(rep, b, c, r);
  rep.summary_lines.push_back("1 + P(b,c) >= |P(a,b) - P(a,c)|: " +
                              std::string(r.holds ? "holds" : "violated") +
                              " (margin " + format_double(r.margin) + ")");
  return rep;
}

Report run_bell_scan(const RunConfig &config) {
  std::vector<double> grid = config.grid();
  BellScanResult scan;
  std::uint64_t samples_used = 0;
  if (config.model == "sign-mc") {
    require_samples(config);
    samples_used = config.samples;
    scan = bell_scan_mc(builtin_sign_model(), grid, grid, config.samples,
                        RandomSeed{config.seed}, mode_of(config));
  } else {
    scan = bell_scan(closed_form_for(config.model), grid, grid, config.tolerance);
  }

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, samples_used);
  rep.csv_header = {"theta1", "theta2", "lhs", "rhs", "margin", "holds", "stderr"};
  nlohmann::json points = nlohmann::json::array();
  for (const BellScanPoint &p : scan.points) {
    nlohmann::json pj = bell_json(p.result);
    pj["theta1"] = p.theta1_deg;
    pj["theta2"] = p.theta2_deg;
    points.push_back(pj);
    push_bell_row(rep, p.theta1_deg, p.theta2_deg, p.result);
  }
  const BellScanPoint &w = scan.worst();
  nlohmann::json worst = bell_json(w.result);
  worst["theta1"] = w.theta1_deg;
  worst["theta2"] = w.theta2_deg;
  rep.results = {{"points", points},
                 {"worst", worst},
                 {"violations", scan.violation_count()},
                 {"grid_points", scan.points.size()}};
  rep.summary_lines.push_back(
      std::to_string(scan.violation_count()) + " of " + std::to_string(scan.points.size()) +
      " grid points violate the inequality; largest violation margin " +
      format_double(w.result.margin) + " at (" + format_double(w.theta1_deg) + ", " +
      format_double(w.theta2_deg) + ")");
  return rep;
}

Report run_chsh(const RunConfig &config) {
  require_angles(config, 4, "chsh");
  double a = config.angles_deg[0], a2 = config.angles_deg[1];
  double b = config.angles_deg[2], b2 = config.angles_deg[3];

  double value = 0.0, se = 0.0;
  std::uint64_t samples_used = 0;
  if (config.model == "sign-mc") {
    require_samples(config);
    samples_used = config.samples;
    ChshEstimate est =
        chsh_mc(builtin_sign_model(), UnitVector3::in_plane_deg(a), UnitVector3::in_plane_deg(a2),
                UnitVector3::in_plane_deg(b), UnitVector3::in_plane_deg(b2), config.samples,
                RandomSeed{config.seed}, mode_of(config));
    value = est.value;
    se = est.std_error;
  } else {
    value = chsh_value_deg(closed_form_for(config.model), a, a2, b, b2);
  }

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, samples_used);
  rep.results = {{"angles_deg", config.angles_deg},
                 {"value", value},
                 {"stderr", se},
                 {"lhv_bound", 2.0},
                 {"qm_value_at_optimum", 2.0 * std::sqrt(2.0)}};
  rep.csv_header = {"a", "a_prime", "b", "b_prime", "value", "stderr"};
  rep.csv_rows.push_back({format_double(a), format_double(a2), format_double(b),
                          format_double(b2), format_double(value), format_double(se)});
  rep.summary_lines.push_back("|P(a,b) - P(a,b') + P(a',b) + P(a',b')| = " +
                              format_double(value));
  return rep;
}

Report run_lhv_compare(const RunConfig &config) {
  require_samples(config);
  if (config.model != "sign" && config.model != "sign-mc") {
    throw validation_error("lhv-compare: pick a hidden-variable model (sign)");
  }
  HiddenVariableModel model = builtin_sign_model();
  std::vector<double> grid = config.grid();

  ParamSampler sampler = [&model](double theta_deg, RandomStream &rng) {
    UnitVector3 a = UnitVector3::in_plane_deg(0.0);
    UnitVector3 b = UnitVector3::in_plane_deg(theta_deg);
    std::any l = model.sample_lambda(rng);
    return static_cast<double>(model.response_e(a, l) * model.response_p(b, l));
  };
  std::vector<SweepRow> rows =
      sweep(sampler, grid, config.samples, RandomSeed{config.seed}, mode_of(config));

  Report rep;
  rep.config = config;
  rep.metadata = metadata_for(config, config.samples);
  rep.csv_header = {"theta_deg", "qm", "model_exact", "mc_mean", "mc_stderr"};
  nlohmann::json points = nlohmann::json::array();
  for (const SweepRow &r : rows) {
    double qm = -cos_deg(r.param);
    double exact = model.exact_correlation(r.param);
    points.push_back({{"theta_deg", r.param},
                      {"qm", qm},
                      {"model_exact", exact},
                      {"mc_mean", r.est.mean},
                      {"mc_stderr", r.est.std_error}});
    rep.csv_rows.push_back({format_double(r.param), format_double(qm), format_double(exact),
                            format_double(r.est.mean), format_double(r.est.std_error)});
  }
  rep.results = {{"model", model.name}, {"points", points}};
  return rep;
}

Report run_ledger_demo(const RunConfig &config) {
  RunConfig c = config;
  if (c.angles_deg.empty()) c.angles_deg = {0.0, 60.0};
  require_angles(c, 2, "ledger-demo");

  UnitVector3 a = UnitVector3::in_plane_deg(c.angles_deg[0]);
  UnitVector3 b = UnitVector3::in_plane_deg(c.angles_deg[1]);
  RandomStream rng(RandomSeed{c.seed});
  PairSample outcome = simulate_pair(a, b, rng);
  EventTimeline timeline{c.t0, c.t1, c.separation};
  KnowledgeLedger ledger = build_ledger(timeline, a, b, outcome);

  Report rep;
  rep.config = c;
  rep.metadata = metadata_for(c, 1);
  rep.verification_status = ledger.consistent() ? 0 : 3;
  nlohmann::json intervals = nlohmann::json::array();
  for (const TimeInterval &iv : ledger.double_knowledge_intervals(Particle::positron)) {
    intervals.push_back(iv.str());
  }
  rep.results = {{"outcome", {{"s_e", outcome.s_e}, {"s_p", outcome.s_p}}},
                 {"ledger", ledger.to_json()},
                 {"double_knowledge_intervals", intervals},
                 {"consistent", ledger.consistent()}};
  rep.csv_header = {"particle", "axis_x",        "axis_y",     "axis_z",
                    "value",    "defined_on",    "knowable_from", "derivation"};
  for (const LedgerEntry &e : ledger.entries()) {
    rep.csv_rows.push_back({to_string(e.particle), format_double(e.axis.x),
                            format_double(e.axis.y), format_double(e.axis.z),
                            std::to_string(e.value), e.defined_on.str(),
                            e.knowable_from ? format_double(*e.knowable_from) : "never",
                            e.derivation});
  }
  rep.table_prefers_summary = true;
  rep.summary_lines.push_back("pair outcome: s_e = " + std::to_string(outcome.s_e) +
                              ", s_p = " + std::to_string(outcome.s_p));
  std::istringstream table(ledger.to_table());
  for (std::string line; std::getline(table, line);) rep.summary_lines.push_back(line);
  return rep;
}

Report run_command(const RunConfig &config) {
  if (config.subcommand == "singlet-sweep") return run_singlet_sweep(config);
  if (config.subcommand == "ghz-check") return run_ghz_check(config);
  if (config.subcommand == "bell-test") return run_bell_test(config);
  if (config.subcommand == "bell-scan") return run_bell_scan(config);
  if (config.subcommand == "chsh") return run_chsh(config);
  if (config.subcommand == "lhv-compare") return run_lhv_compare(config);
  if (config.subcommand == "ledger-demo") return run_ledger_demo(config);
  throw validation_error("unknown subcommand '" + config.subcommand + "'");
}

std::string to_json_string(const Report &report) {
  nlohmann::json j{{"artifact", {{"name", kArtifactName}, {"version", kArtifactVersion}}},
                   {"config", report.config.to_json()},
                   {"metadata", report.metadata.to_json()},
                   {"results", report.results},
                   {"status", report.verification_status}};
  return j.dump(2) + "\n";
}

std::string to_csv_string(const Report &report) {
  std::ostringstream os;
  os << kCsvMagic << "\n";
  os << "# config: " << report.config.to_json().dump() << "\n";
  os << "# metadata: " << report.metadata.to_json().dump() << "\n";
  for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
    os << (i ? "," : "") << report.csv_header[i];
  }
  os << "\n";
  for (const std::vector<std::string> &row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  for (const std::string &line : report.summary_lines) os << "# " << line << "\n";
  return os.str();
}

std::string to_table_string(const Report &report) {
  std::ostringstream os;
  os << kArtifactName << " " << report.config.subcommand << "\n";
  std::vector<std::size_t> width(report.csv_header.size(), 0);
  for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
    width[i] = report.csv_header[i].size();
  }
  for (const auto &row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      if (row[i].size() > width[i]) width[i] = row[i].size();
    }
  }
  auto emit = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << "\n";
  };
  if (!report.table_prefers_summary) {
    emit(report.csv_header);
    for (const auto &row : report.csv_rows) emit(row);
  }
  for (const std::string &line : report.summary_lines) os << line << "\n";
  os << "seed " << report.metadata.seed.value << ", generator " << report.metadata.generator
     << ", samples " << report.metadata.samples << ", v" << kArtifactVersion << "\n";
  return os.str();
}

std::string render(const Report &report) {
  if (report.config.format == "json") return to_json_string(report);
  if (report.config.format == "csv") return to_csv_string(report);
  if (report.config.format == "table") return to_table_string(report);
  throw validation_error("unknown format '" + report.config.format +
                         "' (use json, csv, or table)");
}

RunConfig config_from_report_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("config")) throw validation_error("report has no config block");
  return RunConfig::from_json(j["config"]);
}

RunConfig config_from_report_csv(const std::string &text) {
  std::istringstream is(text);
  const std::string prefix = "# config: ";
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(prefix, 0) == 0) {
      return RunConfig::from_json(nlohmann::json::parse(line.substr(prefix.size())));
    }
  }
  throw validation_error("CSV report has no '# config:' line");
}

}  // namespace entsim
