// Copyright 2026 The recallnet Authors
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

// recallnet command-line driver.
//
//   recallnet run       --config FILE --out DIR [--seed S] [--workers N] [--mode M]
//   recallnet sweep     --config FILE --out DIR [--seed S] [--workers N] [--mode M]
//   recallnet homophily --input FILE [--delta D] [--timing T] [--similarity S] [--out FILE]
//   recallnet tables    --in DIR [--in DIR ...] --out DIR [--rho R] [--recovery-delta D]
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "recallnet/bipartite.hpp"
#include "recallnet/config.hpp"
#include "recallnet/engine.hpp"
#include "recallnet/errors.hpp"
#include "recallnet/homophily.hpp"
#include "recallnet/io.hpp"
#include "recallnet/similarity.hpp"

namespace fs = std::filesystem;
using namespace recallnet;

namespace {

struct ExperimentFlags {
  std::string config;
  std::string out = "results";
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::string mode;
};

ExperimentConfig load(const ExperimentFlags& flags) {
  ExperimentConfig cfg;
  if (!flags.config.empty()) {
    if (!fs::exists(flags.config)) throw IoError("config file not found: '" + flags.config + "'");
    cfg = parse_config(flags.config);
  } else {
    cfg = parse_config_text("[topology]\nkind = sparse_er\n");
  }
  if (flags.seed) cfg.base_seed = *flags.seed;
  if (!flags.mode.empty()) cfg.mode = parse_mode(flags.mode);
  cfg.validate();
  return cfg;
}

int run_experiment(const ExperimentFlags& flags, bool grid, const std::string& command) {
  ExperimentConfig cfg = load(flags);
  if (!grid) cfg.sweep.reset();
  Manifest manifest;
  manifest.command = command;
  manifest.started = utc_timestamp();
  manifest.base_seed = cfg.base_seed;
  manifest.config_text = serialize_config(cfg);

  const SweepResult result = run_sweep(cfg, flags.workers);
  for (const auto& run : result.runs) {
    manifest.seeds.push_back(run.seed);
    manifest.run_seconds.push_back(run.seconds);
  }

  OutputStage stage(flags.out);
  stage.stage("runs.csv", runs_csv(cfg, result));
  stage.stage("vor_summary.csv", vor_summary_csv(cfg, result));
  stage.stage("aggregate.csv", aggregate_csv(cfg, result));
  stage.stage("config.ini", manifest.config_text);
  manifest.outputs = {"runs.csv", "vor_summary.csv", "aggregate.csv", "config.ini",
                      "manifest.json"};
  manifest.finished = utc_timestamp();
  stage.stage("manifest.json", manifest_json(manifest));
  stage.commit();

  std::cout << "wrote " << result.runs.size() << " runs in " << result.cells.size()
            << " cell(s) to " << flags.out << '\n';
  return 0;
}

int run_homophily(const std::string& input, double delta, const std::string& timing,
                  const std::string& similarity, const std::string& out) {
  std::ifstream in(input);
  if (!in) throw IoError("cannot read bipartite edge list '" + input + "'");
  const BipartiteIncidence b = read_bipartite_edges(in);
  const DecaySpec spec = DecaySpec::exponential(delta);
  const SecondModeTiming second_timing = parse_second_mode_timing(timing);

  // X over each mode: cosine of incidence profiles, or all ones.
  auto profiles = [&](bool agents) {
    const std::size_t rows = agents ? b.mode1_count() : b.mode2_count();
    const std::size_t cols = agents ? b.mode2_count() : b.mode1_count();
    std::vector<std::vector<double>> p(rows, std::vector<double>(cols, 0.0));
    for (const auto& [key, value] : b.entries()) {
      if (agents) p[key.first][key.second] = value;
      else p[key.second][key.first] = value;
    }
    return p;
  };
  auto build = [&](bool agents) {
    const std::size_t n = agents ? b.mode1_count() : b.mode2_count();
    if (similarity == "ones") {
      SimilarityMatrix x(n, SimilarityMetric::kCosine);
      for (NodeId i = 0; i < n; ++i)
        for (NodeId k = i + 1; k < n; ++k) x.set(i, k, 1.0);
      return x;
    }
    if (similarity != "cosine") {
      throw ValidationError("--similarity '" + similarity + "' not one of cosine | ones");
    }
    const auto p = profiles(agents);
    return attribute_similarity(p);
  };

  nlohmann::ordered_json j;
  j["mode1_count"] = b.mode1_count();
  j["mode2_count"] = b.mode2_count();
  j["delta"] = delta;
  j["lambda"] = spec.lambda();
  j["similarity"] = similarity;
  j["second_mode_timing"] = std::string(to_string(second_timing));
  j["first_mode"] = first_mode_homophily(b, build(true), spec);
  j["second_mode"] = second_mode_homophily(b, build(false), spec, second_timing);
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    const fs::path target(out);
    OutputStage stage(target.parent_path().empty() ? fs::path(".") : target.parent_path());
    stage.stage(target.filename().string(), text);
    stage.commit();
  }
  return 0;
}

int run_tables(const std::vector<std::string>& inputs, const std::string& out, double rho,
               double recovery_delta) {
  std::vector<CsvTable> tables;
  for (const auto& dir : inputs) tables.push_back(read_csv(fs::path(dir) / "aggregate.csv"));
  const SummaryTables t = make_tables(tables, rho, recovery_delta);
  OutputStage stage(out);
  stage.stage("table1.csv", t.table1);
  stage.stage("table2.csv", t.table2);
  stage.stage("table3.csv", t.table3);
  stage.commit();
  std::cout << t.table3;
  return 0;
}

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& flags) {
  cmd->add_option("--config", flags.config, "Experiment config file");
  cmd->add_option("--out", flags.out, "Output directory");
  cmd->add_option("--seed", flags.seed, "Base seed (overrides experiment.base_seed)");
  cmd->add_option("--workers", flags.workers, "Concurrent runs")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", flags.mode, "static | decay | dynamic | adversarial");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic homophily under imperfect recall: simulation and metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ExperimentFlags run_flags, sweep_flags;
  auto* run = app.add_subcommand("run", "Run one configuration (runs x replicates)");
  add_experiment_flags(run, run_flags);
  auto* sweep = app.add_subcommand("sweep", "Run the delta x rho grid");
  add_experiment_flags(sweep, sweep_flags);

  std::string input, timing = "latest_neighbor", similarity = "cosine", hout;
  double delta = 0.8;
  auto* homophily = app.add_subcommand("homophily", "Bipartite homophily statistics as JSON");
  homophily->add_option("--input", input, "Edge list `i j value t_i`")->required();
  homophily->add_option("--delta", delta, "Retention factor")->check(CLI::Range(0.0, 1.0));
  homophily->add_option("--timing", timing, "latest_neighbor | ignore");
  homophily->add_option("--similarity", similarity, "cosine | ones");
  homophily->add_option("--out", hout, "Write JSON here instead of stdout");

  std::vector<std::string> table_inputs;
  std::string table_out = "tables";
  double table_rho = 0.0, recovery_delta = 0.8;
  auto* tables = app.add_subcommand("tables", "Summarise aggregate CSVs into table shapes");
  tables->add_option("--in", table_inputs, "Sweep output directory (repeatable)")->required();
  tables->add_option("--out", table_out, "Output directory");
  tables->add_option("--rho", table_rho, "rho used for tables 1 and 3");
  tables->add_option("--recovery-delta", recovery_delta, "delta used for table 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) return run_experiment(run_flags, false, "run");
    if (*sweep) return run_experiment(sweep_flags, true, "sweep");
    if (*homophily) return run_homophily(input, delta, timing, similarity, hout);
    if (*tables) return run_tables(table_inputs, table_out, table_rho, recovery_delta);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
