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

#ifndef RECALLNET_DECAY_HPP_
#define RECALLNET_DECAY_HPP_

#include <map>
#include <optional>
#include <string_view>

#include "recallnet/graph.hpp"

namespace recallnet {

enum class DecayFamily { kExponential, kNone };

std::string_view to_string(DecayFamily family);
DecayFamily parse_decay_family(std::string_view name);

// Weights below this are treated as forgotten and dropped from the graph.
inline constexpr double kPruneEpsilon = 1e-6;

// Memory model g(t) = exp(-lambda t) with retention factor delta = exp(-lambda).
// delta is the configured quantity; lambda is always derived from it.
class DecaySpec {
 public:
  DecaySpec() = default;

  static DecaySpec exponential(double delta);
  static DecaySpec none();

  DecayFamily family() const { return family_; }
  double delta() const { return delta_; }
  // -ln(delta); +inf when delta == 0; 0 for the None family.
  double lambda() const { return lambda_; }

  void set_delta(double delta);
  void set_family(DecayFamily family) { family_ = family; }

  // Per-node retention, overriding the global delta for that node.
  void set_node_delta(NodeId node, double delta);
  const std::map<NodeId, double>& node_overrides() const { return overrides_; }

  double delta_for(NodeId node) const;
  // The faster forgetter of the two endpoints sets the edge's retention.
  double edge_delta(NodeId i, NodeId j) const;

  bool operator==(const DecaySpec&) const = default;

 private:
  DecayFamily family_ = DecayFamily::kExponential;
  double delta_ = 1.0;
  double lambda_ = 0.0;
  std::map<NodeId, double> overrides_;
};

// delta^dt for the global delta; exactly 1 when dt == 0 or family is None.
double decay_factor(const DecaySpec& spec, TimeStep dt);
// Same kernel for real-valued elapsed time, using a specific retention.
double decay_factor(const DecaySpec& spec, double delta, double elapsed);

// Batch form: w <- delta_e^(now - last_active) * w for every edge.
// Timestamps are left alone; decay is not an interaction.
void apply_decay(WeightedGraph& g, const DecaySpec& spec, TimeStep now);

// Incremental form used by the simulation loop: w <- delta_e^steps * w,
// independent of last_active. Repeated unit steps compose to delta^age.
void apply_step_decay(WeightedGraph& g, const DecaySpec& spec, TimeStep steps = 1);

// f(x, R_i) = x * g(|t_i - t_k|). With `node` set, that node's override
// (if any) supplies the retention.
double recall_modulated_similarity(double x, const DecaySpec& spec, double t_i, double t_k,
                                   std::optional<NodeId> node = std::nullopt);

}  // namespace recallnet

#endif  // RECALLNET_DECAY_HPP_
