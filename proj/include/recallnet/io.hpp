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

#ifndef RECALLNET_IO_HPP_
#define RECALLNET_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "recallnet/engine.hpp"

namespace recallnet {

inline constexpr std::string_view kToolVersion = "recallnet 0.1.0";

// Exact column orders of the two public CSV schemas.
inline constexpr std::string_view kRunsCsvHeader =
    "run_seed,t,delta,rho,metric,topology,utility,adv_success,avg_path_len,edges,components";
inline constexpr std::string_view kVorCsvHeader =
    "delta,rho,metric,topology,u_delta,u_zero,u_one,vor_ratio,vor_normalized";
inline constexpr std::string_view kAggregateCsvHeader =
    "delta,rho,metric,topology,runs,utility_mean,utility_sd,vor_ratio_mean,vor_ratio_sd,"
    "vor_normalized_mean,vor_normalized_sd,u_zero_mean,u_one_mean,adv_success_mean,"
    "avg_path_len_mean,avg_path_len_sd";

// Shortest decimal that reads back to the same double; "nan" for NaN.
std::string format_number(double v);

// One row per (run, t).
std::string runs_csv(const ExperimentConfig& cfg, const SweepResult& sweep);
// One row per cell: cell means of U_delta, U0, U1 and both VoR forms.
std::string vor_summary_csv(const ExperimentConfig& cfg, const SweepResult& sweep);
// One row per cell with means and sample SDs.
std::string aggregate_csv(const ExperimentConfig& cfg, const SweepResult& sweep);

struct Manifest {
  std::string command;
  std::string config_text;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> run_seconds;
  std::vector<std::string> outputs;
  std::string started;
  std::string finished;
};

std::string manifest_json(const Manifest& m);

// UTC wall-clock time as ISO-8601.
std::string utc_timestamp();

// Collects output files under temporary names and moves them to their
// final names only in commit(). Uncommitted temporaries are deleted on
// destruction, so an interrupted run never leaves a file under a final name.
class OutputStage {
 public:
  explicit OutputStage(std::filesystem::path dir);
  ~OutputStage();
  OutputStage(const OutputStage&) = delete;
  OutputStage& operator=(const OutputStage&) = delete;

  void stage(const std::string& name, std::string_view content);
  std::vector<std::filesystem::path> commit();

  static std::filesystem::path temp_name(const std::filesystem::path& final_path);

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> finals_;
  bool committed_ = false;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws ValidationError naming the missing column.
  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
// Throws IoError when the file cannot be read.
CsvTable read_csv(const std::filesystem::path& path);

struct SummaryTables {
  std::string table1;  // delta -> utility and VoR mean +- SD
  std::string table2;  // recovery % by rho and metric
  std::string table3;  // topology x delta x metric utility
};

// Builds the three summary tables from one or more aggregate CSVs.
// Tables 1 and 3 use the rows with rho == `rho`; table 2 uses the rows with
// delta == `recovery_delta`, relative to rho = 0 of the same metric and
// topology and averaged over topologies.
SummaryTables make_tables(const std::vector<CsvTable>& aggregates, double rho,
                        double recovery_delta);

}  // namespace recallnet

#endif  // RECALLNET_IO_HPP_
