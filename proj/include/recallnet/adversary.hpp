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

#ifndef RECALLNET_ADVERSARY_HPP_
#define RECALLNET_ADVERSARY_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "recallnet/graph.hpp"

namespace recallnet {

enum class AttackCriterion {
  kMaxWeight,                // heaviest first
  kCompositePredictability,  // high betweenness and low weight first
  kStaleness,                // longest since last interaction first
};

// Config spellings: max_weight | composite | staleness.
std::string_view to_string(AttackCriterion criterion);
AttackCriterion parse_attack_criterion(std::string_view name);

struct AdversaryPolicy {
  AttackCriterion criterion = AttackCriterion::kCompositePredictability;
  // Share of the current edges removed per attack.
  double fraction = 0.10;
  // When set, overrides `fraction` with a fixed edge count.
  std::optional<std::size_t> absolute_k;

  void validate() const;
  // ceil(fraction * edges), or absolute_k, clamped to `edges`.
  std::size_t k_for(std::size_t edges) const;

  bool operator==(const AdversaryPolicy&) const = default;
};

// Unweighted (hop-count) edge betweenness by Brandes' accumulation, one
// value per edge in g.edges() order. Each unordered source/target pair is
// counted once.
std::vector<double> edge_betweenness(const WeightedGraph& g);

// Deterministic ranking of the k most predictable edges. Ties go to the
// lexicographically smallest edge.
std::vector<Edge> select_top_k(const WeightedGraph& g, const AdversaryPolicy& policy,
                               TimeStep now);

struct Removal {
  Edge edge;
  // Marginal utility loss: the edge's weight at removal time.
  double loss = 0.0;
  // Removal split a component (measured just before this removal).
  bool disconnected = false;
};

struct AttackReport {
  double utility_before = 0.0;
  std::vector<Removal> removals;

  double total_loss() const;
};

// Removes select_top_k(g, policy, now) one edge at a time, recording each
// edge's loss and disconnection effect against the state just before it.
AttackReport attack(WeightedGraph& g, const AdversaryPolicy& policy, TimeStep now);

}  // namespace recallnet

#endif  // RECALLNET_ADVERSARY_HPP_
