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

#include "recallnet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kStatic: return "static";
    case Mode::kDecayOnly: return "decay";
    case Mode::kDynamic: return "dynamic";
    case Mode::kAdversarial: return "adversarial";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "static") return Mode::kStatic;
  if (key == "decay" || key == "decay_only") return Mode::kDecayOnly;
  if (key == "dynamic") return Mode::kDynamic;
  if (key == "adversarial") return Mode::kAdversarial;
  throw ValidationError("mode '" + std::string(name) +
                        "' not one of static | decay | dynamic | adversarial");
}

void ExperimentConfig::validate() const {
  topology.validate();
  adversary.validate();
  reconnect.validate();
  if (!(initial_attack_fraction >= 0.0 && initial_attack_fraction <= 1.0)) {
    throw ValidationError("adversary.initial_fraction = " +
                          std::to_string(initial_attack_fraction) + " out of range [0, 1]");
  }
  if (steps < 1) throw ValidationError("experiment.steps must be >= 1");
  if (runs < 1) throw ValidationError("experiment.runs must be >= 1");
  if (sweep) {
    if (sweep->deltas.empty()) throw ValidationError("sweep.delta must not be empty");
    if (sweep->rhos.empty()) throw ValidationError("sweep.rho must not be empty");
    for (double d : sweep->deltas) {
      if (!(d >= 0.0 && d <= 1.0)) {
        throw ValidationError("sweep.delta entry " + std::to_string(d) + " out of range [0, 1]");
      }
    }
    for (double r : sweep->rhos) {
      if (!(r >= 0.0 && r <= 1.0)) {
        throw ValidationError("sweep.rho entry " + std::to_string(r) + " out of range [0, 1]");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Simulation

Simulation::Simulation(const ExperimentConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), reconnect_rng_(seed, Stream::kReconnect) {
  cfg_.validate();
  cfg_.topology.seed = seed;
  graph_ = generate(cfg_.topology);
  if (reconnects()) {
    threshold_ = compute_threshold(similarity_matrix(graph_, cfg_.metric), cfg_.reconnect);
  }
  record();
  if (attacks() && cfg_.initial_attack_fraction > 0.0) {
    AdversaryPolicy initial = cfg_.adversary;
    initial.fraction = cfg_.initial_attack_fraction;
    initial.absolute_k.reset();
    pending_.push_back(attack(graph_, initial, now_));
  }
}

bool Simulation::decays() const { return cfg_.mode != Mode::kStatic; }
bool Simulation::attacks() const { return cfg_.mode == Mode::kAdversarial; }
bool Simulation::reconnects() const {
  return (cfg_.mode == Mode::kDynamic || cfg_.mode == Mode::kAdversarial) &&
         cfg_.reconnect.rho > 0.0;
}

void Simulation::decay_phase() {
  ++now_;
  if (!decays()) return;
  apply_step_decay(graph_, cfg_.decay);
  graph_.prune_below(kPruneEpsilon);
}

void Simulation::attack_phase() {
  if (attacks()) pending_.push_back(attack(graph_, cfg_.adversary, now_));
}

void Simulation::reconnect_phase() {
  if (!reconnects()) return;
  // Similarity reflects the post-attack structure.
  const SimilarityMatrix x = similarity_matrix(graph_, cfg_.metric);
  reconnect(graph_, x, cfg_.reconnect, *threshold_, reconnect_rng_, now_);
}

const CycleRecord& Simulation::record() {
  records_.push_back(snapshot_record(graph_, now_, adversarial_success(pending_)));
  pending_.clear();
  return records_.back();
}

void Simulation::step() {
  decay_phase();
  attack_phase();
  reconnect_phase();
  record();
}

// ---------------------------------------------------------------------------
// Runs

std::vector<CycleRecord> simulate(const ExperimentConfig& cfg, std::uint64_t seed) {
  Simulation sim(cfg, seed);
  for (std::size_t t = 0; t < cfg.steps; ++t) sim.step();
  return sim.records();
}

ExperimentConfig static_reference(const ExperimentConfig& cfg) {
  ExperimentConfig ref = cfg;
  ref.decay = DecaySpec::none();
  ref.reconnect.rho = 0.0;
  ref.sweep.reset();
  return ref;
}

ExperimentConfig perfect_recall_reference(const ExperimentConfig& cfg) {
  ExperimentConfig ref = cfg;
  ref.decay.set_delta(1.0);
  for (const auto& [node, delta] : cfg.decay.node_overrides()) ref.decay.set_node_delta(node, 1.0);
  ref.sweep.reset();
  return ref;
}

RunResult run_once(const ExperimentConfig& cfg, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.seed = seed;
  result.delta = cfg.decay.family() == DecayFamily::kNone ? 1.0 : cfg.decay.delta();
  result.rho = cfg.reconnect.rho;
  result.records = simulate(cfg, seed);
  const double u_delta = result.final_utility();
  if (cfg.reference_runs) {
    const double u_zero = simulate(static_reference(cfg), seed).back().utility;
    const double u_one = simulate(perfect_recall_reference(cfg), seed).back().utility;
    result.vor = make_vor_report(u_delta, u_zero, u_one);
  } else {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    result.vor = VorReport{u_delta, nan, nan, nan, nan};
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  if (values.empty()) {
    s.mean = s.sd = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
  return s;
}

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t delta_index, std::size_t rho_index,
                       std::size_t run_index) {
  return derive_seed(base_seed, {delta_index, rho_index, run_index});
}

namespace {

struct Job {
  std::size_t delta_index;
  std::size_t rho_index;
  std::size_t run_index;
};

CellAggregate aggregate_cell(const std::vector<RunResult>& runs, std::size_t first,
                             std::size_t count) {
  CellAggregate cell;
  cell.runs = count;
  std::vector<double> u, ratio, norm, zero, one, success, path;
  for (std::size_t r = first; r < first + count; ++r) {
    const RunResult& run = runs[r];
    u.push_back(run.final_utility());
    ratio.push_back(run.vor.vor_ratio);
    norm.push_back(run.vor.vor_normalized);
    zero.push_back(run.vor.u_zero);
    one.push_back(run.vor.u_one);
    double s = 0.0;
    for (std::size_t t = 1; t < run.records.size(); ++t) s += run.records[t].adv_success;
    success.push_back(run.records.size() > 1 ? s / static_cast<double>(run.records.size() - 1)
                                             : 0.0);
    if (run.records.back().avg_path_len) path.push_back(*run.records.back().avg_path_len);
  }
  cell.utility = summarize(u);
  cell.vor_ratio = summarize(ratio);
  cell.vor_normalized = summarize(norm);
  cell.u_zero = summarize(zero);
  cell.u_one = summarize(one);
  cell.adv_success = summarize(success);
  cell.avg_path_len = summarize(path);
  return cell;
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t workers) {
  cfg.validate();
  SweepSpec grid;
  if (cfg.sweep) {
    grid = *cfg.sweep;
  } else {
    grid.deltas = {cfg.decay.delta()};
    grid.rhos = {cfg.reconnect.rho};
  }

  std::vector<Job> jobs;
  for (std::size_t d = 0; d < grid.deltas.size(); ++d)
    for (std::size_t r = 0; r < grid.rhos.size(); ++r)
      for (std::size_t k = 0; k < cfg.runs; ++k) jobs.push_back({d, r, k});

  SweepResult result;
  result.runs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const Job& job = jobs[i];
        ExperimentConfig cell = cfg;
        cell.sweep.reset();
        cell.decay.set_delta(grid.deltas[job.delta_index]);
        cell.reconnect.rho = grid.rhos[job.rho_index];
        result.runs[i] =
            run_once(cell, run_seed(cfg.base_seed, job.delta_index, job.rho_index, job.run_index));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t d = 0; d < grid.deltas.size(); ++d) {
    for (std::size_t r = 0; r < grid.rhos.size(); ++r) {
      const std::size_t first = (d * grid.rhos.size() + r) * cfg.runs;
      CellAggregate cell = aggregate_cell(result.runs, first, cfg.runs);
      cell.delta = grid.deltas[d];
      cell.rho = grid.rhos[r];
      cell.delta_index = d;
      cell.rho_index = r;
      result.cells.push_back(cell);
    }
  }
  return result;
}

}  // namespace recallnet
