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

#ifndef RECALLNET_ENGINE_HPP_
#define RECALLNET_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "recallnet/adversary.hpp"
#include "recallnet/decay.hpp"
#include "recallnet/generators.hpp"
#include "recallnet/metrics.hpp"
#include "recallnet/reconnect.hpp"
#include "recallnet/rng.hpp"
#include "recallnet/similarity.hpp"

namespace recallnet {

// Progressive model stages: each adds one mechanism to the previous.
enum class Mode {
  kStatic,       // ties never change
  kDecayOnly,    // + memory decay
  kDynamic,      // + similarity-gated reconnection
  kAdversarial,  // + targeted deletions
};

// Spellings: static | decay | dynamic | adversarial.
std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);

struct SweepSpec {
  std::vector<double> deltas{0.6, 0.7, 0.8, 0.9};
  std::vector<double> rhos{0.0, 0.1, 0.3, 0.5};

  bool operator==(const SweepSpec&) const = default;
};

struct ExperimentConfig {
  TopologySpec topology;
  SimilarityMetric metric = SimilarityMetric::kCosine;
  DecaySpec decay = DecaySpec::exponential(0.8);
  AdversaryPolicy adversary;
  // Share of edges deleted once before the first step (Adversarial mode).
  double initial_attack_fraction = 0.10;
  ReconnectPolicy reconnect;
  Mode mode = Mode::kAdversarial;
  std::size_t steps = 25;
  std::size_t runs = 30;
  std::optional<SweepSpec> sweep;
  std::uint64_t base_seed = 0;
  // Also evaluate the static and perfect-recall reference runs that the
  // normalized VoR needs.
  bool reference_runs = true;

  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

// One simulation, advanced phase by phase. Phases are public so tests can
// observe the state between them; step() runs them in order.
class Simulation {
 public:
  Simulation(const ExperimentConfig& cfg, std::uint64_t seed);

  const WeightedGraph& graph() const { return graph_; }
  TimeStep now() const { return now_; }
  // Threshold used by reconnection; absent when reconnection is off.
  std::optional<double> threshold() const { return threshold_; }

  // Advances the clock and decays every edge by one step, then prunes.
  void decay_phase();
  void attack_phase();
  void reconnect_phase();
  // Appends the record for the current time, pooling every attack since the
  // previous record into adv_success.
  const CycleRecord& record();

  void step();

  const std::vector<CycleRecord>& records() const { return records_; }

 private:
  bool decays() const;
  bool attacks() const;
  bool reconnects() const;

  ExperimentConfig cfg_;
  WeightedGraph graph_;
  TimeStep now_ = 0;
  std::optional<double> threshold_;
  CounterRng reconnect_rng_;
  std::vector<AttackReport> pending_;
  std::vector<CycleRecord> records_;
};

struct RunResult {
  std::uint64_t seed = 0;
  double delta = 1.0;
  double rho = 0.0;
  std::vector<CycleRecord> records;  // steps + 1 entries, t = 0..T
  VorReport vor;                     // all-NaN VoR fields when references are off
  double seconds = 0.0;

  double final_utility() const { return records.back().utility; }
};

// Only the trajectory; no reference runs.
std::vector<CycleRecord> simulate(const ExperimentConfig& cfg, std::uint64_t seed);

// Reference configurations for the normalized VoR, sharing the seed:
// U0 drops decay and reconnection (ties never update) while keeping the
// attacks; U1 keeps everything but sets delta = 1.
ExperimentConfig static_reference(const ExperimentConfig& cfg);
ExperimentConfig perfect_recall_reference(const ExperimentConfig& cfg);

RunResult run_once(const ExperimentConfig& cfg, std::uint64_t seed);

struct Summary {
  double mean = 0.0;
  double sd = 0.0;  // sample SD; 0 for a single value
};

// NaN-propagating mean and sample standard deviation.
Summary summarize(const std::vector<double>& values);

struct CellAggregate {
  double delta = 0.0;
  double rho = 0.0;
  std::size_t delta_index = 0;
  std::size_t rho_index = 0;
  std::size_t runs = 0;
  Summary utility;
  Summary vor_ratio;
  Summary vor_normalized;
  Summary u_zero;
  Summary u_one;
  Summary adv_success;   // pooled over each run's horizon
  Summary avg_path_len;  // final record; runs without a defined value are skipped
};

struct SweepResult {
  // Ordered by (delta index, rho index, run index).
  std::vector<RunResult> runs;
  std::vector<CellAggregate> cells;
};

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t delta_index, std::size_t rho_index,
                       std::size_t run_index);

// delta x rho x runs. Uses cfg.sweep, or the single configured delta/rho
// when no sweep is given. Runs are spread over `workers` threads; results
// do not depend on the worker count.
SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t workers = 1);

}  // namespace recallnet

#endif  // RECALLNET_ENGINE_HPP_
