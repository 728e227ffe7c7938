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

#include "recallnet/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

void check_delta(double delta, const std::string& what) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw ValidationError(what + " = " + std::to_string(delta) + " out of range [0, 1]");
  }
}

double power(double delta, double elapsed) {
  if (elapsed == 0.0) return 1.0;
  if (delta == 0.0) return 0.0;
  return std::pow(delta, elapsed);
}

}  // namespace

std::string_view to_string(DecayFamily family) {
  return family == DecayFamily::kNone ? "none" : "exponential";
}

DecayFamily parse_decay_family(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "exponential" || key == "exp") return DecayFamily::kExponential;
  if (key == "none") return DecayFamily::kNone;
  throw ValidationError("decay.family = '" + std::string(name) +
                        "' not one of exponential | none");
}

DecaySpec DecaySpec::exponential(double delta) {
  DecaySpec spec;
  spec.set_delta(delta);
  return spec;
}

DecaySpec DecaySpec::none() {
  DecaySpec spec;
  spec.family_ = DecayFamily::kNone;
  return spec;
}

void DecaySpec::set_delta(double delta) {
  check_delta(delta, "decay.delta");
  delta_ = delta;
  lambda_ = delta == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(delta);
}

void DecaySpec::set_node_delta(NodeId node, double delta) {
  check_delta(delta, "decay override for node " + std::to_string(node));
  overrides_[node] = delta;
}

double DecaySpec::delta_for(NodeId node) const {
  if (family_ == DecayFamily::kNone) return 1.0;
  auto it = overrides_.find(node);
  return it == overrides_.end() ? delta_ : it->second;
}

double DecaySpec::edge_delta(NodeId i, NodeId j) const {
  if (family_ == DecayFamily::kNone) return 1.0;
  if (overrides_.empty()) return delta_;
  return std::min(delta_for(i), delta_for(j));
}

double decay_factor(const DecaySpec& spec, TimeStep dt) {
  if (dt < 0) throw ValidationError("decay_factor: elapsed time must be >= 0");
  if (spec.family() == DecayFamily::kNone) return 1.0;
  return power(spec.delta(), static_cast<double>(dt));
}

double decay_factor(const DecaySpec& spec, double delta, double elapsed) {
  if (!(elapsed >= 0.0)) throw ValidationError("decay_factor: elapsed time must be >= 0");
  if (spec.family() == DecayFamily::kNone) return 1.0;
  return power(delta, elapsed);
}

void apply_decay(WeightedGraph& g, const DecaySpec& spec, TimeStep now) {
  if (spec.family() == DecayFamily::kNone) return;
  g.transform_weights([&](const Edge& e, const EdgeState& s) {
    if (s.last_active > now) {
      throw ValidationError("apply_decay: edge active after `now`");
    }
    return s.weight * power(spec.edge_delta(e.u, e.v), static_cast<double>(now - s.last_active));
  });
}

void apply_step_decay(WeightedGraph& g, const DecaySpec& spec, TimeStep steps) {
  if (steps < 0) throw ValidationError("apply_step_decay: steps must be >= 0");
  if (spec.family() == DecayFamily::kNone || steps == 0) return;
  g.transform_weights([&](const Edge& e, const EdgeState& s) {
    return s.weight * power(spec.edge_delta(e.u, e.v), static_cast<double>(steps));
  });
}

double recall_modulated_similarity(double x, const DecaySpec& spec, double t_i, double t_k,
                                   std::optional<NodeId> node) {
  const double delta = node ? spec.delta_for(*node) : spec.delta();
  return x * decay_factor(spec, delta, std::fabs(t_i - t_k));
}

}  // namespace recallnet
