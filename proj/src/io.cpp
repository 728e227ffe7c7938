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

#include "recallnet/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <tuple>

#include "json.hpp"
#include "recallnet/config.hpp"
#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace fs = std::filesystem;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

namespace {

std::string short_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void cell_prefix(std::ostream& out, const ExperimentConfig& cfg, const CellAggregate& cell) {
  out << format_number(cell.delta) << ',' << format_number(cell.rho) << ','
      << to_string(cfg.metric) << ',' << to_string(cfg.topology.kind);
}

double as_double(const std::string& field) {
  if (field.empty()) return std::nan("");
  return std::strtod(field.c_str(), nullptr);
}

}  // namespace

std::string runs_csv(const ExperimentConfig& cfg, const SweepResult& sweep) {
  std::ostringstream out;
  out << kRunsCsvHeader << '\n';
  for (const RunResult& run : sweep.runs) {
    for (const CycleRecord& rec : run.records) {
      out << run.seed << ',' << rec.t << ',' << format_number(run.delta) << ','
          << format_number(run.rho) << ',' << to_string(cfg.metric) << ','
          << to_string(cfg.topology.kind) << ',' << format_number(rec.utility) << ','
          << format_number(rec.adv_success) << ','
          << (rec.avg_path_len ? format_number(*rec.avg_path_len) : std::string()) << ','
          << rec.edges << ',' << rec.components << '\n';
    }
  }
  return out.str();
}

std::string vor_summary_csv(const ExperimentConfig& cfg, const SweepResult& sweep) {
  std::ostringstream out;
  out << kVorCsvHeader << '\n';
  for (const CellAggregate& cell : sweep.cells) {
    cell_prefix(out, cfg, cell);
    out << ',' << format_number(cell.utility.mean) << ',' << format_number(cell.u_zero.mean)
        << ',' << format_number(cell.u_one.mean) << ',' << format_number(cell.vor_ratio.mean)
        << ',' << format_number(cell.vor_normalized.mean) << '\n';
  }
  return out.str();
}

std::string aggregate_csv(const ExperimentConfig& cfg, const SweepResult& sweep) {
  std::ostringstream out;
  out << kAggregateCsvHeader << '\n';
  for (const CellAggregate& cell : sweep.cells) {
    cell_prefix(out, cfg, cell);
    out << ',' << cell.runs;
    for (const Summary* s : {&cell.utility, &cell.vor_ratio, &cell.vor_normalized}) {
      out << ',' << format_number(s->mean) << ',' << format_number(s->sd);
    }
    out << ',' << format_number(cell.u_zero.mean) << ',' << format_number(cell.u_one.mean)
        << ',' << format_number(cell.adv_success.mean) << ','
        << format_number(cell.avg_path_len.mean) << ',' << format_number(cell.avg_path_len.sd)
        << '\n';
  }
  return out.str();
}

std::string manifest_json(const Manifest& m) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = m.command;
  j["config"] = m.config_text;
  j["base_seed"] = m.base_seed;
  j["seeds"] = m.seeds;
  j["run_seconds"] = m.run_seconds;
  j["outputs"] = m.outputs;
  j["started"] = m.started;
  j["finished"] = m.finished;
  return j.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

// ---------------------------------------------------------------------------
// OutputStage

OutputStage::OutputStage(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create output directory '" + dir_.string() + "': " + ec.message());
}

OutputStage::~OutputStage() {
  if (committed_) return;
  std::error_code ec;
  for (const auto& f : finals_) fs::remove(temp_name(f), ec);
}

fs::path OutputStage::temp_name(const fs::path& final_path) {
  return final_path.parent_path() / ("." + final_path.filename().string() + ".partial");
}

void OutputStage::stage(const std::string& name, std::string_view content) {
  const fs::path final_path = dir_ / name;
  const fs::path tmp = temp_name(final_path);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  finals_.push_back(final_path);
}

std::vector<fs::path> OutputStage::commit() {
  for (const auto& f : finals_) {
    std::error_code ec;
    fs::rename(temp_name(f), f, ec);
    if (ec) throw IoError("cannot rename output to '" + f.string() + "': " + ec.message());
  }
  committed_ = true;
  return finals_;
}

// ---------------------------------------------------------------------------
// CSV reading and tables

std::size_t CsvTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw ValidationError("CSV is missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != table.header.size()) {
        throw ValidationError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                              std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read CSV '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_csv(text.str());
}

SummaryTables make_tables(const std::vector<CsvTable>& aggregates, double rho,
                        double recovery_delta) {
  struct Row {
    double delta, rho;
    std::string metric, topology;
    double u_mean, u_sd, vor_mean, vor_sd;
  };
  std::vector<Row> rows;
  for (const CsvTable& t : aggregates) {
    const auto c_delta = t.column("delta"), c_rho = t.column("rho"), c_metric = t.column("metric"),
               c_topo = t.column("topology"), c_um = t.column("utility_mean"),
               c_usd = t.column("utility_sd"), c_vm = t.column("vor_normalized_mean"),
               c_vsd = t.column("vor_normalized_sd");
    for (const auto& r : t.rows) {
      rows.push_back({as_double(r[c_delta]), as_double(r[c_rho]), r[c_metric], r[c_topo],
                      as_double(r[c_um]), as_double(r[c_usd]), as_double(r[c_vm]),
                      as_double(r[c_vsd])});
    }
  }
  auto same = [](double a, double b) { return std::fabs(a - b) < 1e-12; };
  const std::vector<std::string> metrics{"cosine", "jaccard", "baseline"};
  SummaryTables out;

  {
    std::map<double, std::vector<const Row*>> by_delta;
    for (const Row& r : rows)
      if (same(r.rho, rho)) by_delta[r.delta].push_back(&r);
    std::ostringstream t1;
    t1 << "delta,settings,utility_mean,utility_sd,vor_normalized_mean,vor_normalized_sd\n";
    for (const auto& [delta, group] : by_delta) {
      double um = 0, uvar = 0, vm = 0, vvar = 0;
      for (const Row* r : group) {
        um += r->u_mean;
        uvar += r->u_sd * r->u_sd;
        vm += r->vor_mean;
        vvar += r->vor_sd * r->vor_sd;
      }
      const double k = static_cast<double>(group.size());
      t1 << format_number(delta) << ',' << group.size() << ',' << short_number(um / k) << ','
         << short_number(std::sqrt(uvar / k)) << ',' << short_number(vm / k) << ','
         << short_number(std::sqrt(vvar / k)) << '\n';
    }
    out.table1 = t1.str();
  }

  {
    // (metric, topology) -> rho -> utility at the recovery delta.
    std::map<std::pair<std::string, std::string>, std::map<double, double>> u;
    std::set<double> rhos;
    for (const Row& r : rows) {
      if (!same(r.delta, recovery_delta)) continue;
      u[{r.metric, r.topology}][r.rho] = r.u_mean;
      if (r.rho > 0) rhos.insert(r.rho);
    }
    std::ostringstream t2;
    t2 << "rho,cosine,jaccard,baseline\n";
    for (double rr : rhos) {
      t2 << format_number(rr);
      for (const auto& metric : metrics) {
        double sum = 0;
        int count = 0;
        for (const auto& [key, curve] : u) {
          if (key.first != metric) continue;
          auto base = curve.find(0.0);
          auto at = curve.find(rr);
          if (base == curve.end() || at == curve.end() || base->second == 0.0) continue;
          sum += 100.0 * (at->second - base->second) / base->second;
          ++count;
        }
        t2 << ',' << (count ? short_number(sum / count) : std::string("nan"));
      }
      t2 << '\n';
    }
    out.table2 = t2.str();
  }

  {
    std::map<std::tuple<std::string, double>, std::map<std::string, double>> grid;
    for (const Row& r : rows)
      if (same(r.rho, rho)) grid[{r.topology, r.delta}][r.metric] = r.u_mean;
    std::ostringstream t3;
    t3 << "topology,delta,cosine,jaccard,baseline\n";
    for (const auto& [key, by_metric] : grid) {
      t3 << std::get<0>(key) << ',' << format_number(std::get<1>(key));
      for (const auto& metric : metrics) {
        auto it = by_metric.find(metric);
        t3 << ',' << (it == by_metric.end() ? std::string("nan") : short_number(it->second));
      }
      t3 << '\n';
    }
    out.table3 = t3.str();
  }
  return out;
}

}  // namespace recallnet
