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

#include "recallnet/metrics.hpp"

#include <limits>

#include "recallnet/errors.hpp"

namespace recallnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t count_successes(const AttackReport& report, double u_before) {
  std::size_t hits = 0;
  for (const Removal& r : report.removals) {
    if (r.disconnected || r.loss >= kSuccessLossShare * u_before) ++hits;
  }
  return hits;
}

}  // namespace

double utility(const WeightedGraph& g) { return g.total_weight(); }

double adversarial_success(const AttackReport& report, double u_before) {
  if (report.removals.empty()) return 0.0;
  if (u_before <= 0.0) {
    throw UndefinedMetricError("adversarial success undefined: utility before attack is 0");
  }
  return static_cast<double>(count_successes(report, u_before)) /
         static_cast<double>(report.removals.size());
}

double adversarial_success(std::span<const AttackReport> reports) {
  std::size_t attempts = 0;
  std::size_t hits = 0;
  for (const AttackReport& report : reports) {
    if (report.removals.empty()) continue;
    if (report.utility_before <= 0.0) {
      throw UndefinedMetricError("adversarial success undefined: utility before attack is 0");
    }
    attempts += report.removals.size();
    hits += count_successes(report, report.utility_before);
  }
  return attempts == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(attempts);
}

double vor_ratio(double u_perfect, double u_imperfect) {
  if (u_imperfect == 0.0) {
    throw UndefinedMetricError("VoR ratio undefined: utility under imperfect recall is 0");
  }
  return u_perfect / u_imperfect;
}

double vor_normalized(double u_delta, double u_zero, double u_one) {
  if (u_one == u_zero) {
    throw UndefinedMetricError("normalized VoR undefined: U1 equals U0");
  }
  return (u_delta - u_zero) / (u_one - u_zero);
}

VorReport make_vor_report(double u_delta, double u_zero, double u_one) {
  VorReport r{u_delta, u_zero, u_one, kNaN, kNaN};
  if (u_delta != 0.0) r.vor_ratio = vor_ratio(u_one, u_delta);
  if (u_one != u_zero) r.vor_normalized = vor_normalized(u_delta, u_zero, u_one);
  return r;
}

CycleRecord snapshot_record(const WeightedGraph& g, TimeStep t, double adv_success) {
  CycleRecord rec;
  rec.t = t;
  rec.utility = utility(g);
  rec.adv_success = adv_success;
  rec.edges = g.edge_count();
  rec.components = component_count(g);
  if (largest_component(g).size() >= 2) rec.avg_path_len = average_path_length(g);
  return rec;
}

}  // namespace recallnet
