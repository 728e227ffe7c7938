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

#ifndef RECALLNET_METRICS_HPP_
#define RECALLNET_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "recallnet/adversary.hpp"
#include "recallnet/graph.hpp"

namespace recallnet {

// Share of the pre-batch utility a single deletion must remove to count as
// a successful attack.
inline constexpr double kSuccessLossShare = 0.10;

struct CycleRecord {
  TimeStep t = 0;
  double utility = 0.0;
  double adv_success = 0.0;
  std::optional<double> avg_path_len;  // absent when the largest component is a single node
  std::size_t edges = 0;
  std::size_t components = 0;

  bool operator==(const CycleRecord&) const = default;
};

struct VorReport {
  double u_delta = 0.0;
  double u_zero = 0.0;
  double u_one = 0.0;
  // NaN when undefined (zero imperfect utility, flat envelope).
  double vor_ratio = 0.0;
  double vor_normalized = 0.0;
};

// Sum of edge weights.
double utility(const WeightedGraph& g);

// Fraction of the batch's deletions that lost >= 10% of u_before or split a
// component. Empty report -> 0. Throws UndefinedMetricError when u_before
// is 0 and the report is not empty.
double adversarial_success(const AttackReport& report, double u_before);

// Pooled rate over several batches: successes / attempts, each deletion
// judged against its own batch's utility_before. 0 with no attempts.
double adversarial_success(std::span<const AttackReport> reports);

// Utility under perfect recall over utility under imperfect recall.
// Throws UndefinedMetricError when u_imperfect is 0.
double vor_ratio(double u_perfect, double u_imperfect);

// (u_delta - u_zero) / (u_one - u_zero), unclamped. Throws
// UndefinedMetricError when u_one == u_zero.
double vor_normalized(double u_delta, double u_zero, double u_one);

// Fills both VoR forms, using NaN wherever a form is undefined.
VorReport make_vor_report(double u_delta, double u_zero, double u_one);

// Builds the per-cycle snapshot of `g`.
CycleRecord snapshot_record(const WeightedGraph& g, TimeStep t, double adv_success);

}  // namespace recallnet

#endif  // RECALLNET_METRICS_HPP_
